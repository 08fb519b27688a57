//! Plain-text instance files.
//!
//! ```text
//! # comments start with '#'
//! field Q                 # or: field F 5
//! kind table 2            # a Hopf algebra on basis b0, b1
//! unit 1*0
//! mul 0 0 = 1*0
//! mul 0 1 = 1*1
//! mul 1 0 = 1*1
//! mul 1 1 = 1*0
//! delta 0 = 1*0|0
//! delta 1 = 1*1|1
//! eps 0 = 1
//! eps 1 = 1
//! antipode 0 = 1*0        # optional, all or none
//! antipode 1 = 1*1
//! ```
//!
//! or a finite group by its Cayley table (rows and columns indexed `0..n`):
//!
//! ```text
//! field Q
//! kind group 2
//! 0 1
//! 1 0
//! ```
//!
//! A linear combination is `c*k + c*k + ...` with `c` an integer or
//! fraction and `k` a basis index (`k1|k2` for the two factors of `delta`),
//! or the literal `0`.

use crate::algebra::{Algebra, BasisKey};
use crate::error::{Error, Result};
use crate::hopf::{function_hopf, group_hopf, FiniteGroup, HopfAlgebra};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// What an instance file describes.
#[derive(Clone, Debug)]
pub enum Instance {
    Table(HopfAlgebra),
    Group { group: FiniteGroup, field: Field },
}

impl Instance {
    /// The Hopf algebras to run table scenarios on: the algebra itself, or
    /// `K[G]` and `K^G`.
    pub fn hopf_algebras(&self) -> Vec<HopfAlgebra> {
        match self {
            Instance::Table(h) => vec![h.clone()],
            Instance::Group { group, field } => vec![group_hopf(group, *field), function_hopf(group, *field)],
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Instance::Table(h) => h.field(),
            Instance::Group { field, .. } => *field,
        }
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match self {
            Instance::Group { group, .. } => Some(group),
            Instance::Table(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn err(t: &Token, message: impl Into<String>) -> Error {
    Error::Parse { line: t.line, column: t.column, token: t.text.to_string(), message: message.into() }
}

fn eof(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column: 1, token: String::new(), message: message.into() }
}

/// Splits each non-empty line into whitespace-separated tokens with positions.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (j, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    toks.push(Token { text: &content[s..j], line: i + 1, column: content[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

fn number(t: &Token, bound: usize, what: &str) -> Result<usize> {
    let n: usize = t.text.parse().map_err(|_| err(t, format!("expected {what}")))?;
    if n >= bound {
        return Err(err(t, format!("{what} out of range (must be < {bound})")));
    }
    Ok(n)
}

fn parse_field(line: &[Token]) -> Result<Field> {
    let head = &line[0];
    if head.text != "field" {
        return Err(err(head, "expected 'field Q' or 'field F <p>'"));
    }
    match line.get(1).map(|t| t.text) {
        Some("Q") | Some("q") if line.len() == 2 => Ok(Field::Rational),
        Some("F") | Some("f") if line.len() == 3 => {
            let p: u64 = line[2].text.parse().map_err(|_| err(&line[2], "expected a prime"))?;
            Field::prime(p).map_err(|e| err(&line[2], e.to_string()))
        }
        _ => Err(err(line.get(1).unwrap_or(head), "expected 'field Q' or 'field F <p>'")),
    }
}

/// `c*k + ...` over `arity` factors; returns `(keys, coefficient)` terms.
fn parse_lincomb(tokens: &[Token], field: Field, dim: usize, arity: usize) -> Result<Vec<(Vec<usize>, Scalar)>> {
    if tokens.len() == 1 && tokens[0].text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sign_next = false;
    let mut expect_term = true;
    for t in tokens {
        if !expect_term {
            match t.text {
                "+" => sign_next = false,
                "-" => sign_next = true,
                _ => return Err(err(t, "expected '+' or '-' between terms")),
            }
            expect_term = true;
            continue;
        }
        let (coef, keys) = match t.text.split_once('*') {
            Some((c, k)) if arity > 0 => (c, k),
            None if arity == 0 => (t.text, ""),
            _ => return Err(err(t, if arity == 0 { "expected a scalar" } else { "expected a term 'c*k'" })),
        };
        let mut c = field.parse_scalar(coef).ok_or_else(|| err(t, "bad coefficient"))?;
        if sign_next {
            c = -&c;
        }
        let keys: Vec<usize> = if arity == 0 {
            Vec::new()
        } else {
            keys.split('|')
                .map(|k| {
                    let n: usize = k.parse().map_err(|_| err(t, "bad basis index"))?;
                    if n >= dim {
                        return Err(err(t, format!("basis index {n} out of range (dimension {dim})")));
                    }
                    Ok(n)
                })
                .collect::<Result<_>>()?
        };
        if keys.len() != arity {
            return Err(err(t, format!("expected {arity} basis indices joined by '|'")));
        }
        out.push((keys, c));
        expect_term = false;
    }
    if expect_term {
        let last = tokens.last().ok_or_else(|| eof(0, "empty linear combination"))?;
        return Err(err(last, "linear combination ends with an operator"));
    }
    Ok(out)
}

fn dense(field: Field, dim: usize, terms: &[(Vec<usize>, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    for (k, c) in terms {
        v[k[0]] = &v[k[0]] + c;
    }
    v
}

/// Splits `head args... = rhs...` at the `=`.
fn split_eq<'t, 'a>(line: &'t [Token<'a>]) -> Result<(&'t [Token<'a>], &'t [Token<'a>])> {
    let pos = line.iter().position(|t| t.text == "=").ok_or_else(|| err(&line[0], "missing '='"))?;
    let rhs = &line[pos + 1..];
    if rhs.is_empty() {
        return Err(err(&line[pos], "missing right-hand side"));
    }
    Ok((&line[..pos], rhs))
}

/// Parses an instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let first = it.next().ok_or_else(|| eof(1, "empty instance file"))?;
    let field = parse_field(first)?;
    let kind = it.next().ok_or_else(|| eof(first[0].line + 1, "missing 'kind' line"))?;
    if kind[0].text != "kind" || kind.len() != 3 {
        return Err(err(&kind[0], "expected 'kind table <dim>' or 'kind group <n>'"));
    }
    let n = number(&kind[2], 65, "a size between 1 and 64")?;
    if n == 0 {
        return Err(err(&kind[2], "size must be positive"));
    }
    let rest: Vec<&Vec<Token>> = it.collect();
    match kind[1].text {
        "group" => parse_group(field, n, &rest, kind[0].line),
        "table" => parse_table(field, n, &rest, kind[0].line),
        _ => Err(err(&kind[1], "expected 'table' or 'group'")),
    }
}

fn parse_group(field: Field, n: usize, rows: &[&Vec<Token>], kind_line: usize) -> Result<Instance> {
    if rows.len() != n {
        let line = rows.get(n).map(|r| r[0].line).unwrap_or(kind_line + rows.len() + 1);
        return Err(eof(line, format!("expected {n} table rows, found {}", rows.len())));
    }
    let mut table = Vec::with_capacity(n);
    for row in rows {
        if row.len() != n {
            return Err(err(row.last().expect("non-empty"), format!("expected {n} entries in this row")));
        }
        table.push(row.iter().map(|t| number(t, n, "a group element index")).collect::<Result<Vec<_>>>()?);
    }
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let group = FiniteGroup::from_table(names, table)
        .map_err(|e| Error::Parse { line: rows[0][0].line, column: 1, token: String::new(), message: e.to_string() })?;
    Ok(Instance::Group { group, field })
}

fn parse_table(field: Field, dim: usize, lines: &[&Vec<Token>], kind_line: usize) -> Result<Instance> {
    let mut unit: Option<Vec<Scalar>> = None;
    let mut products: Vec<Vec<Option<Vec<Scalar>>>> = vec![vec![None; dim]; dim];
    let mut delta: Vec<Option<Vec<(Vec<usize>, Scalar)>>> = vec![None; dim];
    let mut eps: Vec<Option<Scalar>> = vec![None; dim];
    let mut antipode: Vec<Option<Vec<Scalar>>> = vec![None; dim];
    let mut last_line = kind_line;
    for line in lines {
        let head = &line[0];
        last_line = head.line;
        let dup = |t: &Token| err(t, "duplicate definition");
        match head.text {
            "unit" => {
                if unit.is_some() {
                    return Err(dup(head));
                }
                if line.len() < 2 {
                    return Err(err(head, "missing linear combination"));
                }
                unit = Some(dense(field, dim, &parse_lincomb(&line[1..], field, dim, 1)?));
            }
            "mul" => {
                let (lhs, rhs) = split_eq(line)?;
                if lhs.len() != 3 {
                    return Err(err(head, "expected 'mul i j = ...'"));
                }
                let i = number(&lhs[1], dim, "a basis index")?;
                let j = number(&lhs[2], dim, "a basis index")?;
                if products[i][j].is_some() {
                    return Err(dup(head));
                }
                products[i][j] = Some(dense(field, dim, &parse_lincomb(rhs, field, dim, 1)?));
            }
            "delta" | "eps" | "antipode" => {
                let (lhs, rhs) = split_eq(line)?;
                if lhs.len() != 2 {
                    return Err(err(head, format!("expected '{} i = ...'", head.text)));
                }
                let i = number(&lhs[1], dim, "a basis index")?;
                match head.text {
                    "delta" => {
                        if delta[i].is_some() {
                            return Err(dup(head));
                        }
                        delta[i] = Some(parse_lincomb(rhs, field, dim, 2)?);
                    }
                    "eps" => {
                        if eps[i].is_some() {
                            return Err(dup(head));
                        }
                        let terms = parse_lincomb(rhs, field, dim, 0)?;
                        eps[i] = Some(terms.iter().fold(field.zero(), |acc, (_, c)| &acc + c));
                    }
                    _ => {
                        if antipode[i].is_some() {
                            return Err(dup(head));
                        }
                        antipode[i] = Some(dense(field, dim, &parse_lincomb(rhs, field, dim, 1)?));
                    }
                }
            }
            _ => return Err(err(head, "expected one of unit, mul, delta, eps, antipode")),
        }
    }
    let missing = |what: String| eof(last_line + 1, format!("missing {what}"));
    let unit = unit.ok_or_else(|| missing("unit".into()))?;
    let mut prods = Vec::with_capacity(dim);
    for (i, row) in products.into_iter().enumerate() {
        let mut r = Vec::with_capacity(dim);
        for (j, p) in row.into_iter().enumerate() {
            r.push(p.ok_or_else(|| missing(format!("mul {i} {j}")))?);
        }
        prods.push(r);
    }
    let commutative = (0..dim).all(|i| (0..dim).all(|j| prods[i][j] == prods[j][i]));
    let names = (0..dim).map(|i| format!("b{i}")).collect();
    let alg = Algebra::table("T", field, names, unit, prods, commutative)?;
    let pair = [alg.clone(), alg.clone()];
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            let terms = d.ok_or_else(|| missing(format!("delta {i}")))?;
            Ok(Tensor::from_terms(
                field,
                &pair,
                terms.into_iter().map(|(k, c)| (k.into_iter().map(|x| BasisKey::Index(x as u32)).collect(), c)),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let eps = eps
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| missing(format!("eps {i}"))))
        .collect::<Result<Vec<_>>>()?;
    let given = antipode.iter().filter(|s| s.is_some()).count();
    let antipode = match given {
        0 => None,
        g if g == dim => Some(
            antipode
                .into_iter()
                .map(|s| {
                    let v = s.expect("all given");
                    alg.from_terms(v.into_iter().enumerate().map(|(k, c)| (BasisKey::Index(k as u32), c)))
                })
                .collect(),
        ),
        _ => {
            let i = antipode.iter().position(Option::is_none).expect("some missing");
            return Err(missing(format!("antipode {i} (give all antipode lines or none)")));
        }
    };
    Ok(Instance::Table(HopfAlgebra::from_tables("T", &alg, delta, eps, antipode)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GROUP_ALGEBRA: &str = "\
field Q
kind table 2
unit 1*0
mul 0 0 = 1*0
mul 0 1 = 1*1
mul 1 0 = 1*1
mul 1 1 = 1*0
delta 0 = 1*0|0
delta 1 = 1*1|1
eps 0 = 1
eps 1 = 1
antipode 0 = 1*0
antipode 1 = 1*1
";

    #[test]
    fn parses_group_algebra_table() {
        let Instance::Table(h) = parse_instance(GROUP_ALGEBRA).unwrap() else { panic!("table expected") };
        assert_eq!(h.algebra().dim(), Some(2));
        assert!(h.is_commutative() && h.is_cocommutative() && h.has_antipode());
    }

    #[test]
    fn reports_position_of_bad_token() {
        let text = GROUP_ALGEBRA.replace("delta 1 = 1*1|1", "delta 1 = 1*1|7");
        match parse_instance(&text) {
            Err(Error::Parse { line, column, token, .. }) => {
                assert_eq!((line, column, token.as_str()), (9, 11, "1*1|7"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn group_file() {
        let inst = parse_instance("field F 5\nkind group 3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(inst.field(), Field::Prime(5));
        assert_eq!(inst.group().unwrap().label(), "Z3");
        assert!(parse_instance("field Q\nkind group 2\n0 1\n0 1\n").is_err());
    }
}
