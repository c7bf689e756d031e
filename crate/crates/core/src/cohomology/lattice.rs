//! Sublattices of `Z^r` given by generating columns, and the subquotients
//! between them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{IntMatrix, SmithDecomposition};

/// Columns spanning `{x : b x = 0}`.
pub fn kernel(b: &IntMatrix) -> IntMatrix {
    let s = SmithDecomposition::new(b);
    s.v.column_range(s.rank..b.cols())
}

/// `{x in Z^r : f x ∈ span(rel)}` for an `r`-column map `f`.
pub fn preimage(f: &IntMatrix, rel: &IntMatrix) -> IntMatrix {
    let r = f.cols();
    let ker = kernel(&f.hcat(&rel.neg()));
    ker.row_range(0..r)
}

/// A lattice presented by a Z-basis obtained from Smith form of its generators.
pub struct Lattice {
    smith: SmithDecomposition,
}

impl Lattice {
    pub fn spanned_by(gens: &IntMatrix) -> Self {
        Lattice {
            smith: SmithDecomposition::new(gens),
        }
    }

    pub fn rank(&self) -> usize {
        self.smith.rank
    }

    /// Coordinates of `v` in the lattice basis `d_i · U⁻¹ e_i`, or `None`
    /// when `v` is not in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.smith.u.mul_vec(v);
        let mut coords = Vec::with_capacity(self.rank());
        for (i, wi) in w.iter().enumerate() {
            if i < self.rank() {
                let (q, r) = wi.div_rem(&self.smith.d[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                coords.push(q);
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Invariant factors of `outer / inner` where `inner ⊆ outer`, both given by
/// generating columns. Trivial factors are dropped; each free summand shows up
/// as a `0`, after the torsion part.
pub fn quotient_invariants(outer: &IntMatrix, inner: &IntMatrix) -> Vec<BigInt> {
    let big = Lattice::spanned_by(outer);
    let n = big.rank();
    let columns: Vec<Vec<BigInt>> = (0..inner.cols())
        .map(|j| {
            big.coordinates(&inner.column(j))
                .expect("inner lattice must lie in the outer lattice")
        })
        .collect();
    let coords = IntMatrix::from_columns(n, &columns);
    let s = SmithDecomposition::new(&coords);
    let mut out: Vec<BigInt> = s.divisors().into_iter().filter(|d| !d.is_one()).collect();
    out.extend(std::iter::repeat_n(BigInt::zero(), n - s.rank));
    out
}
