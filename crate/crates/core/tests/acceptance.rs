//! Acceptance criteria, one line each. Runs as a plain binary
//! (`harness = false`) and exits non-zero if any criterion fails.

use std::process::ExitCode;

use nebcheck::{run_scenario, scenarios, CheckEntry, Params, Report, Status};

struct Suite {
    all: Report,
}

impl Suite {
    fn scenario(&self, name: &str) -> Vec<&CheckEntry> {
        self.all.entries.iter().filter(|e| e.scenario == name).collect()
    }
}

fn all_pass(entries: &[&CheckEntry]) -> bool {
    !entries.is_empty() && entries.iter().all(|e| e.status.is_pass())
}

fn has_passing(entries: &[&CheckEntry], check: &str) -> bool {
    let of: Vec<&CheckEntry> = entries.iter().copied().filter(|e| e.check == check).collect();
    all_pass(&of)
}

fn failures(entries: &[&CheckEntry]) -> String {
    let mut checks: Vec<&str> = entries.iter().filter(|e| e.status == Status::Fail).map(|e| e.check.as_str()).collect();
    let n = checks.len();
    checks.sort();
    checks.dedup();
    if n == 0 {
        String::new()
    } else {
        format!("{n} failing entries in {}", checks.join(", "))
    }
}

fn find<'a>(entries: &[&'a CheckEntry], check: &str, element: &str) -> Option<&'a CheckEntry> {
    entries.iter().copied().find(|e| e.check == check && e.element == element)
}

type Outcome = (bool, String);

fn example_ex(s: &Suite) -> Outcome {
    let e = s.scenario("example-ex");
    let ok = all_pass(&e)
        && ["neb-coassociativity", "neb-counit", "kernel-vector-nonzero", "theta-r-kernel", "theta-r-routes-agree", "theta-not-isomorphism"]
            .iter()
            .all(|c| has_passing(&e, c));
    (ok, failures(&e))
}

fn example_exhopf(s: &Suite) -> Outcome {
    let e = s.scenario("example-exhopf");
    let ok = all_pass(&e) && has_passing(&e, "hopf-module-coassociativity") && has_passing(&e, "rho-r-equals-theta-r");
    (ok, failures(&e))
}

fn lemma_isigma(s: &Suite) -> Outcome {
    let e = s.scenario("lemma-isigma");
    let tables = ["K[Z2]", "K[Z3]", "K^Z2", "K^Z3"];
    let exact = tables.iter().all(|t| {
        let of: Vec<&CheckEntry> = e.iter().copied().filter(|x| x.element.starts_with(&format!("{t} "))).collect();
        !of.is_empty() && of.iter().all(|x| x.status == Status::Pass)
    });
    let free: Vec<&CheckEntry> = e.iter().copied().filter(|x| x.element.starts_with("H ")).collect();
    let certified = free.iter().all(|x| match x.status {
        Status::Pass => true,
        Status::PassModIdeal => x.certificate.as_ref().is_some_and(|c| !c.is_empty()),
        Status::Fail => false,
    });
    let modded = free.iter().filter(|x| x.status == Status::PassModIdeal).count();
    (exact && !free.is_empty() && certified && all_pass(&e), format!("{modded} free entries closed modulo the ideal"))
}

fn commutative(s: &Suite) -> Outcome {
    let mut ok = true;
    for name in ["prop-comm", "prop-commhopf"] {
        let e = s.scenario(name);
        ok &= all_pass(&e);
        for h in ["K^Z2", "K^Z3", "K^Z2xZ2", "K[Z2]", "K[Z3]"] {
            for check in ["rho-after-theta", "theta-after-rho", "certified-inverse-equals-sigma"] {
                ok &= e.iter().any(|x| x.check == check && x.element.starts_with(&format!("{h} ")));
            }
        }
    }
    (ok, String::new())
}

fn axiom_suites(s: &Suite) -> Outcome {
    let h = s.scenario("hopf-axioms");
    let c = s.scenario("convolution");
    let remark: Vec<&CheckEntry> = c
        .iter()
        .copied()
        .filter(|x| x.check == "hom-inverse-is-composite-with-antipode" && x.element.starts_with("K^Z3 ev_"))
        .collect();
    let free_words = h.iter().any(|x| x.check == "delta-antipode" && x.element.starts_with("H: "));
    let ok = all_pass(&h) && all_pass(&c) && all_pass(&remark) && free_words;
    (ok, format!("{}{}", failures(&h), failures(&c)))
}

fn comonads(s: &Suite) -> Outcome {
    let c = s.scenario("comonads");
    let q = s.scenario("comodule-equivalence");
    let agreements = q.iter().filter(|x| x.check == "comodule-agrees-with-neb").count();
    let mutated = q.iter().any(|x| x.element.starts_with("H θ=θ-mutated"));
    (all_pass(&c) && all_pass(&q) && mutated, format!("{agreements} agreement entries"))
}

fn negative_controls(s: &Suite) -> Outcome {
    let mut notes = Vec::new();
    let coaction = s.scenario("neg-coaction");
    let counit = find(&coaction, "coaction-counit", "u");
    let ok_coaction = counit.is_some_and(|x| {
        x.status == Status::Fail && x.witness.as_ref().is_some_and(|w| w.lhs == "1*(e)" && w.rhs == "1*(u)")
    });
    if !ok_coaction {
        notes.push("corrupted coaction: counit witness missing");
    }
    let theta = s.scenario("neg-example-ex");
    let coassoc = find(&theta, "neb-coassociativity", "e_0");
    let ok_theta = coassoc.is_some_and(|x| {
        x.status == Status::Fail && x.witness.as_ref().is_some_and(|w| w.residual == "1*(a[0;0,1]|a[0;1,0]|1)*e0")
    }) && has_passing(&theta, "neb-counit");
    if !ok_theta {
        notes.push("mutated θ: witness missing or counit regressed");
    }
    let truncated = s.scenario("neg-exhopf");
    let counit = find(&truncated, "hopf-module-counit", "e_1");
    let ok_truncated = counit.is_some_and(|x| {
        x.status == Status::Fail && x.witness.as_ref().is_some_and(|w| w.lhs == "0" && w.residual == "1*(1)*e1")
    }) && has_passing(&truncated, "hopf-module-linearity");
    if !ok_truncated {
        notes.push("truncated δ̄: counit witness missing");
    }
    // Positive scenarios other than the literal δ̄ example must stay green.
    let mut regressions = Vec::new();
    for sc in scenarios() {
        if sc.name.starts_with("neg-") || sc.name == "example-exhopf" {
            continue;
        }
        if !all_pass(&s.scenario(sc.name)) {
            regressions.push(sc.name);
        }
    }
    let note = if regressions.is_empty() { notes.join("; ") } else { format!("regressions in {}", regressions.join(", ")) };
    (ok_coaction && ok_theta && ok_truncated && regressions.is_empty(), note)
}

fn main() -> ExitCode {
    let params = Params::default();
    let first = run_scenario("all", &params).expect("suite runs");
    let second = run_scenario("all", &params).expect("suite runs");
    let deterministic = first.to_json() == second.to_json();
    let suite = Suite { all: first };

    let criteria: [(&str, Outcome); 8] = [
        ("1 example-ex end-to-end", example_ex(&suite)),
        ("2 example-exhopf end-to-end", example_exhopf(&suite)),
        ("3 lemma-isigma exact and certified", lemma_isigma(&suite)),
        ("4 commutative inversion", commutative(&suite)),
        ("5 axiom suites", axiom_suites(&suite)),
        ("6 comonads and comodule equivalence", comonads(&suite)),
        ("7 negative controls", negative_controls(&suite)),
        ("8 determinism", (deterministic, format!("{} bytes of JSON", suite.all.to_json().len()))),
    ];
    let mut failed = 0;
    for (name, (ok, note)) in &criteria {
        let status = if *ok { "PASS" } else { "FAIL" };
        if !ok {
            failed += 1;
        }
        if note.is_empty() {
            println!("{status} criterion {name}");
        } else {
            println!("{status} criterion {name} ({note})");
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
