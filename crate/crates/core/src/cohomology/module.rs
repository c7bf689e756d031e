use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, IntMatrix, SmithDecomposition};
use crate::error::{Error, Result};

use super::lattice::{quotient_invariants, Lattice};

/// The three indecomposable `Z_p[G]`-lattices for `G = Z/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Indecomposable {
    Trivial,
    Regular,
    Augmentation,
}

impl Indecomposable {
    pub const ALL: [Indecomposable; 3] = [
        Indecomposable::Trivial,
        Indecomposable::Regular,
        Indecomposable::Augmentation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Indecomposable::Trivial => "trivial",
            Indecomposable::Regular => "regular",
            Indecomposable::Augmentation => "augmentation",
        }
    }
}

impl std::str::FromStr for Indecomposable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Indecomposable::Trivial),
            "regular" => Ok(Indecomposable::Regular),
            "augmentation" => Ok(Indecomposable::Augmentation),
            other => Err(Error::InvalidArgument(format!(
                "unknown module kind {other:?} (expected trivial, regular or augmentation)"
            ))),
        }
    }
}

/// `M = Z^r / span(relations)` with a generator `g` of `G = Z/p^k` acting by
/// `action` on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGModule {
    p: u64,
    order: u64,
    relations: IntMatrix,
    action: IntMatrix,
}

impl CyclicGModule {
    /// Validates the presentation: `order` is a power `p^k` with `k >= 1`,
    /// the action preserves the relation lattice and `g^order` acts as the
    /// identity on the quotient.
    pub fn new(p: u64, order: u64, relations: IntMatrix, action: IntMatrix) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidModule(format!("p = {p} is not prime")));
        }
        let mut k = order;
        let mut exponent = 0;
        while k > 1 && k % p == 0 {
            k /= p;
            exponent += 1;
        }
        if k != 1 || exponent == 0 {
            return Err(Error::InvalidModule(format!(
                "group order {order} is not a positive power of {p}"
            )));
        }
        let r = action.rows();
        if !action.is_square() {
            return Err(Error::InvalidModule(format!(
                "action must be square, got {}x{}",
                action.rows(),
                action.cols()
            )));
        }
        if relations.rows() != r {
            return Err(Error::InvalidModule(format!(
                "relations have {} rows but there are {r} generators",
                relations.rows()
            )));
        }
        let lattice = Lattice::spanned_by(&relations);
        let moved = action.mul(&relations);
        for j in 0..moved.cols() {
            if !lattice.contains(&moved.column(j)) {
                return Err(Error::InvalidModule(format!(
                    "action does not preserve relation column {j}"
                )));
            }
        }
        let drift = action.pow(order).sub(&IntMatrix::identity(r));
        for j in 0..r {
            if !lattice.contains(&drift.column(j)) {
                return Err(Error::InvalidModule(format!(
                    "g^{order} is not the identity on generator {j}"
                )));
            }
        }
        Ok(CyclicGModule { p, order, relations, action })
    }

    /// Explicit integer presentations of the indecomposables for `G = Z/p`:
    /// `Z` with trivial action, `Z[G]` with the cyclic shift, and the
    /// augmentation ideal on the basis `e_i - e_0`, `i = 1..p-1`.
    pub fn indecomposable(p: u64, kind: Indecomposable) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = p as usize;
        let (rank, action) = match kind {
            Indecomposable::Trivial => (1, IntMatrix::identity(1)),
            Indecomposable::Regular => {
                let mut a = IntMatrix::zeros(n, n);
                for i in 0..n {
                    a[((i + 1) % n, i)] = BigInt::one();
                }
                (n, a)
            }
            Indecomposable::Augmentation => {
                // column i-1 holds g(e_i - e_0) = (e_{i+1} - e_0) - (e_1 - e_0)
                let mut a = IntMatrix::zeros(n - 1, n - 1);
                for i in 1..n {
                    a[(0, i - 1)] -= 1;
                    if i + 1 < n {
                        a[(i, i - 1)] += 1;
                    }
                }
                (n - 1, a)
            }
        };
        Self::new(p, p, IntMatrix::zeros(rank, 0), action)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn generator_count(&self) -> usize {
        self.action.rows()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    /// `1 + g + … + g^{|G|-1}`.
    pub fn norm_element_matrix(&self) -> IntMatrix {
        let r = self.generator_count();
        let mut acc = IntMatrix::zeros(r, r);
        let mut power = IntMatrix::identity(r);
        for _ in 0..self.order {
            acc = acc.add(&power);
            power = power.mul(&self.action);
        }
        acc
    }

    /// Invariant factors of the underlying abelian group (zeros for free summands).
    pub fn structure(&self) -> Vec<BigInt> {
        quotient_invariants(&IntMatrix::identity(self.generator_count()), &self.relations)
    }

    /// Z-rank of `M`.
    pub fn rank(&self) -> usize {
        self.structure().iter().filter(|d| d.is_zero()).count()
    }

    /// `|M|`, or `None` when `M` is infinite.
    pub fn cardinality(&self) -> Option<BigInt> {
        let s = self.structure();
        if s.iter().any(Zero::is_zero) {
            None
        } else {
            Some(s.iter().product())
        }
    }

    /// Invariant factors of `M^G`.
    pub fn fixed_invariants(&self) -> Vec<BigInt> {
        let r = self.generator_count();
        let g_minus_1 = self.action.sub(&IntMatrix::identity(r));
        let fixed = super::lattice::preimage(&g_minus_1, &self.relations);
        quotient_invariants(&fixed, &self.relations)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if (self.p, self.order) != (other.p, other.order) {
            return Err(Error::InvalidModule(format!(
                "cannot sum modules over Z/{} and Z/{}",
                self.order, other.order
            )));
        }
        Ok(CyclicGModule {
            p: self.p,
            order: self.order,
            relations: self.relations.block_diag(&other.relations),
            action: self.action.block_diag(&other.action),
        })
    }

    /// Change of presentation by a unimodular `w` (with inverse `w_inv`):
    /// relations `w R`, action `w A w⁻¹`. Returns an isomorphic module.
    pub fn conjugate(&self, w: &IntMatrix, w_inv: &IntMatrix) -> Result<Self> {
        Self::new(
            self.p,
            self.order,
            w.mul(&self.relations),
            w.mul(&self.action).mul(w_inv),
        )
    }

    /// Pontryagin dual `Hom(M, Q/Z)` of a finite module, with `g` acting by
    /// `φ ↦ φ ∘ g⁻¹`. Presented on the invariant-factor decomposition of `M`.
    pub fn dual(&self) -> Result<Self> {
        let (moduli, action) = self.canonical_form()?;
        let n = moduli.len();
        let inverse = action.pow(self.order - 1);
        let mut dual_action = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // y'_j = d_j Σ_i y_i B_ij / d_i
                let num = &inverse[(i, j)] * &moduli[j];
                let (q, r) = num.div_rem(&moduli[i]);
                debug_assert!(r.is_zero());
                dual_action[(j, i)] = q;
            }
        }
        Self::new(self.p, self.order, IntMatrix::diagonal(moduli), dual_action)
    }

    /// For finite `M`: the invariant factors `d_i > 1` and the action in the
    /// matching coordinates `M ≅ ⊕ Z/d_i`.
    pub(crate) fn canonical_form(&self) -> Result<(Vec<BigInt>, IntMatrix)> {
        let r = self.generator_count();
        let s = SmithDecomposition::new(&self.relations);
        if s.rank < r {
            return Err(Error::InfiniteModule);
        }
        let keep: Vec<usize> = (0..r).filter(|&i| !s.d[(i, i)].is_one()).collect();
        let full = s.u.mul(&self.action).mul(&s.u_inv);
        let moduli: Vec<BigInt> = keep.iter().map(|&i| s.d[(i, i)].clone()).collect();
        let mut action = IntMatrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                action[(a, b)] = full[(i, j)].mod_floor(&moduli[a]);
            }
        }
        Ok((moduli, action))
    }
}
