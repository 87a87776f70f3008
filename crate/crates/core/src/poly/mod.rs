//! Polynomial arithmetic over a prime field, Gröbner bases and Hilbert series.

mod field;
mod groebner;
mod hilbert;
mod linalg;
mod monomial;
mod order;
mod ring;
mod text;

pub use field::{is_prime, FieldElem, PrimeField, DEFAULT_PRIME, SECONDARY_PRIME};
pub use groebner::{
    buchberger, buchberger_with, eliminate, is_groebner, krull_dimension, normal_form, saturate,
    saturate_by_variables, BuchbergerOptions, GroebnerBasis,
};
pub use hilbert::HilbertSeries;
pub use linalg::{rank, Echelon};
pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use ring::{PolyRing, Polynomial};
pub use text::{format_monomial, format_polynomial, parse_polynomial};
