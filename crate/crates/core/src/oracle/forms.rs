//! Class numbers of imaginary quadratic fields, two ways: counting reduced
//! forms and summing the quadratic character.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::characters::{is_fundamental_discriminant, kronecker_symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormClassGroup {
    pub discriminant: i64,
    /// Reduced primitive forms `(a, b, c)` ordered by `a`, then `b`.
    pub forms: Vec<(i64, i64, i64)>,
    pub h: u64,
}

/// All reduced primitive forms `a x² + b xy + c y²` with `b² - 4ac = D`:
/// `|b| <= a <= c`, and `b >= 0` when `|b| = a` or `a = c`.
pub fn reduced_forms(disc: i64) -> Result<FormClassGroup> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidArgument(format!(
            "{disc} is not a negative discriminant (need D < 0, D ≡ 0, 1 mod 4)"
        )));
    }
    let n = disc.unsigned_abs() as i64;
    let mut forms = Vec::new();
    // a <= sqrt(|D|/3) follows from |b| <= a <= c
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let (c, rem) = (b * b - disc).div_rem(&(4 * a));
            if rem != 0 || c < a || (a == c && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                forms.push((a, b, c));
            }
        }
        a += 1;
    }
    let h = forms.len() as u64;
    Ok(FormClassGroup { discriminant: disc, forms, h })
}

/// Number of roots of unity in `Q(√D)`.
pub fn roots_of_unity(disc: i64) -> u64 {
    match disc {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// `h(D) = (w / 2|D|) |Σ_{0<a<|D|} χ_D(a) a|` for fundamental `D < 0`.
pub fn dirichlet_class_number(disc: i64) -> Result<u64> {
    if disc >= 0 || !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamental(disc));
    }
    let n = disc.unsigned_abs();
    let sum: i128 = (1..n).map(|a| kronecker_symbol(disc, a) as i128 * a as i128).sum();
    let numerator = roots_of_unity(disc) as i128 * sum.abs();
    let denominator = 2 * n as i128;
    debug_assert_eq!(numerator % denominator, 0);
    Ok((numerator / denominator) as u64)
}
