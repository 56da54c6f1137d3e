//! Exact computation of the plethysm `s_λ[s_μ]` of Schur functions.
//!
//! The monomial coefficients are counted directly as semistandard tableaux of
//! composite shape `λ[μ]` ([`plethysm`]); the Schur coefficients follow from
//! the inverse Kostka matrix ([`symfunc`]) or a Jacobi-Trudi signed sum. The
//! [`oracle`] module recomputes everything through power sums and character
//! values so the two routes can be checked against each other.
//!
//! ```
//! use plethyst::{first_term, schur_expansion, Partition};
//!
//! let lambda: Partition = "3,1".parse()?;
//! let mu: Partition = "2".parse()?;
//! let f = schur_expansion(&lambda, &mu)?;
//! assert_eq!(f.leading_partition(), Some(&first_term(&lambda, &mu)?));
//! assert_eq!(schur_expansion(&"2".parse()?, &mu)?.to_string(), "s[4] + s[2,2]");
//! # Ok::<(), plethyst::Error>(())
//! ```

pub mod error;
pub mod limits;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use limits::Limits;
pub use partition::{partitions_of, revlex_cmp, Partition};
pub use plethysm::{
    coeff_via_jacobi_trudi, enumerate_pleth_weight, first_term, leading_tableaux,
    monomial_expansion, pi_star, schur_expansion, shape_pairs, verify_first_term, ExpansionReport,
    Permutation, PlethTableau, Y,
};
pub use symfunc::{convert, hall_inner, kostka_matrix, Basis, KostkaMatrix, SymFunc};
pub use tableau::{kostka, Tableau, Weight};
