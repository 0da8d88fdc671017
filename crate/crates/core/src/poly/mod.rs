//! Exact sparse polynomial arithmetic over the rationals.

mod monomial;
mod mvpoly;

pub use monomial::Monomial;
pub use mvpoly::{
    elementary_symmetric, elementary_symmetric_all, monomials_of_degree, rat, MvPoly,
};
