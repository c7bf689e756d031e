//! Exact cyclotomic arithmetic and Dirichlet characters.

mod cyclotomic;
mod dirichlet;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use dirichlet::{
    even_two_power_characters, imaginary_quadratic_discriminant, is_fundamental_discriminant,
    kronecker_character, kronecker_symbol, DirichletCharacter,
};

use num_rational::BigRational;

use crate::error::Result;

pub fn cyclo_mul(x: &CyclotomicNumber, y: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    x.try_mul(y)
}

pub fn cyclo_lift(x: &CyclotomicNumber, level: u64) -> Result<CyclotomicNumber> {
    x.lift(level)
}

pub fn is_rational(x: &CyclotomicNumber) -> Option<BigRational> {
    x.is_rational()
}

pub fn char_eval(chi: &DirichletCharacter, a: i64) -> CyclotomicNumber {
    chi.eval(a)
}

pub fn char_is_odd(chi: &DirichletCharacter) -> bool {
    chi.is_odd()
}

pub fn char_mul(a: &DirichletCharacter, b: &DirichletCharacter) -> Result<DirichletCharacter> {
    a.mul(b)
}

pub fn char_conductor(chi: &DirichletCharacter) -> u64 {
    chi.conductor()
}
