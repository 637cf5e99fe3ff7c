//! Associated graded rings, Rees algebras and their local cohomology.
//!
//! For a standard graded algebra `A = k[X_1..X_n]/J` and a homogeneous ideal
//! `I ⊂ A` this crate
//!
//! * presents the Rees algebra `A[It]` and the associated graded ring
//!   `G = ⊕ I^n/I^{n+1}` as quotients of `k[X, Y]` ([`blowup`]),
//! * decides whether `G` is isomorphic to `A` at the level of presentations,
//!   i.e. whether `I` is generated by variables `x_B` and `J` splits into
//!   generators in `k[X_B]` and `k[X_C]` ([`criterion`]),
//! * for squarefree monomial `J`, computes graded local cohomology of `A`
//!   through Hochster's formula ([`hochster`]) and assembles the local
//!   cohomology of `A[It]`, its dimension and its (generalized)
//!   Cohen-Macaulay property ([`rees_cohomology`]).
//!
//! Arithmetic is exact over `Q` and `GF(p)`.

pub mod blowup;
pub mod criterion;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod hochster;
pub mod linalg;
pub mod monomial;
pub mod parallel;
pub mod parse;
pub mod poly;
pub mod rees_cohomology;
pub mod session;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{
    buchberger, elimination_ideal, ideal_equal, ideal_member, ideal_power, normal_form, GroebnerBasis, Ideal,
};
pub use hilbert::{hilbert_function, krull_dim, GradedHilbert};
pub use monomial::{Monomial, MonomialOrder};
pub use parallel::Exec;
pub use parse::parse_poly;
pub use poly::{Bidegree, Degree, Polynomial, Ring};
pub use session::{Config, Session};
