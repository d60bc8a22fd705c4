//! Exact computational topology for links presented as braid closures and
//! for lens spaces presented arithmetically.
//!
//! The crate computes Conway-normalized Alexander polynomials of braid
//! closures through Seifert matrices of Bennequin surfaces, torus-knot
//! polynomials in closed form, residues of link polynomials in quotient
//! rings `(t^m - 1, r)`, linking forms and classification predicates for
//! lens spaces `L(p, q)`, and the congruence obstructions that tie these
//! together for knots covering generators of `H_1(L(p, q))`.
//!
//! All arithmetic is exact: integer coefficients are arbitrary precision and
//! every operation is deterministic, so results are reproducible bit for bit.

pub mod braid;
pub mod lens;
pub mod obstruction;
pub mod poly;
pub mod torus;

pub use braid::{BraidError, BraidWord, DeltaCache, PeriodicSpec, SeifertMatrix, TwistConvention};
pub use lens::{LensError, LensSpace, QmodZ};
pub use obstruction::{
    Branch, GlobalConclusion, Lemma4Report, Lemma4Sweep, ObstructionError, ObstructionReport,
    TheoremSweep,
};
pub use poly::{LaurentPoly, ModulusSpec, PolyError, Residue};
pub use torus::{TorusError, TorusParams};
