//! Cohomology of a cyclic p-group `G = ⟨g⟩` acting on a finitely generated
//! abelian group.
//!
//! For cyclic `G` with norm `N = 1 + g + … + g^{|G|-1}`:
//!
//! ```text
//! H²(G, M) = M^G / N·M        H¹(G, M) = ker N / (g - 1)·M
//! ```
//!
//! and `χ(G, M) = ord_p |H²| - ord_p |H¹|` when both are finite. Everything is
//! computed on lifts to `Z^r`, so each subquotient is a quotient of two
//! lattices containing the relation lattice.

mod brute;
mod lattice;
mod module;

pub use brute::{brute_force_cohomology, ENUMERATION_LIMIT};
pub use module::{CyclicGModule, Indecomposable};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{ord_p, IntMatrix};
use crate::error::{Error, Result};

use lattice::{preimage, quotient_invariants};

/// Invariant factors of `H¹` and `H²` (a `0` marks a free summand) and the
/// Herbrand exponent when both groups are finite. For finitely generated `M`
/// both groups are killed by `|G|`, so `chi` is always present for modules
/// built by [`CyclicGModule::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub h1: Vec<BigInt>,
    pub h2: Vec<BigInt>,
    pub chi: Option<i64>,
}

impl CohomologyReport {
    pub(crate) fn from_invariants(p: u64, h1: Vec<BigInt>, h2: Vec<BigInt>) -> Self {
        let chi = match (log_order(&h1, p), log_order(&h2, p)) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        };
        CohomologyReport { h1, h2, chi }
    }

    pub fn h1_order(&self) -> Option<BigInt> {
        group_order(&self.h1)
    }

    pub fn h2_order(&self) -> Option<BigInt> {
        group_order(&self.h2)
    }
}

fn group_order(invariants: &[BigInt]) -> Option<BigInt> {
    if invariants.iter().any(Zero::is_zero) {
        None
    } else {
        Some(invariants.iter().product())
    }
}

fn log_order(invariants: &[BigInt], p: u64) -> Option<i64> {
    let n = group_order(invariants)?;
    Some(ord_p(n, p).expect("group order is nonzero") as i64)
}

pub fn norm_element_matrix(m: &CyclicGModule) -> IntMatrix {
    m.norm_element_matrix()
}

/// `H¹`, `H²` and `χ` by integer linear algebra on the presentation.
pub fn cohomology(m: &CyclicGModule) -> CohomologyReport {
    let r = m.generator_count();
    let rel = m.relations();
    let g_minus_1 = m.action().sub(&IntMatrix::identity(r));
    let norm = m.norm_element_matrix();

    let fixed = preimage(&g_minus_1, rel);
    let norms = norm.hcat(rel);
    let h2 = quotient_invariants(&fixed, &norms);

    let norm_kernel = preimage(&norm, rel);
    let coboundaries = g_minus_1.hcat(rel);
    let h1 = quotient_invariants(&norm_kernel, &coboundaries);

    CohomologyReport::from_invariants(m.p(), h1, h2)
}

/// Checks `χ(A ⊕ B) = χ(A) + χ(B)` on the direct-sum presentation.
pub fn chi_additivity_check(a: &CyclicGModule, b: &CyclicGModule) -> Result<bool> {
    let chi_a = cohomology(a).chi.ok_or(Error::ChiUndefined)?;
    let chi_b = cohomology(b).chi.ok_or(Error::ChiUndefined)?;
    let sum = cohomology(&a.direct_sum(b)?).chi.ok_or(Error::ChiUndefined)?;
    Ok(sum == chi_a + chi_b)
}
