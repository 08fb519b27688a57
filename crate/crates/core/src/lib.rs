pub mod algebra;
pub mod coaction;
pub mod comonad;
pub mod convolution;
pub mod counterexample;
pub mod equivariance;
pub mod error;
pub mod hopf;
pub mod ideal;
pub mod instance;
pub mod judge;
pub mod linalg;
pub mod linear_map;
pub mod module;
pub mod report;
pub mod scenario;
pub mod scalar;
pub mod tensor;

pub use algebra::{Algebra, BasisKey, Element, GenId, Word};
pub use error::{Error, Result};
pub use hopf::{check_hopf_axioms, free_hopf, function_hopf, group_hopf, Coalgebra, FiniteGroup, HopfAlgebra};
pub use judge::{Judge, Value, Verdict};
pub use linear_map::{map_one_slot, tensor_map, Extension, LinearMap};
pub use module::{ModVec, ModuleMatrix};
pub use instance::{parse_instance, Instance};
pub use report::{CheckEntry, Report, Status};
pub use scenario::{run_scenario, scenarios, Params};
pub use scalar::{Field, Scalar};
pub use tensor::Tensor;
