//! Nilpotent orbits as data.
//!
//! An orbit is named by its algebra and Jordan type. Dimensions come from
//! the standard dual-partition formulas and are cross-checked by
//! [`centralizer_dim_oracle`], which builds an explicit nilpotent matrix of
//! the given Jordan type inside the algebra (for `so`/`sp`, inside the
//! stabilizer of an explicit bilinear form) and measures the rank of
//! `y -> [x, y]` by exact rational elimination.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::error::Error;
use crate::linalg::{self, rat, FieldOps, Matrix, Rationals};
use crate::partition::{in_p_epsilon, partitions_of, Epsilon, Partition};

/// The three classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraKind {
    Sl,
    So,
    Sp,
}

/// A classical simple Lie algebra `sl_n`, `so_n` or `sp_n` (matrix size `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Algebra {
    kind: AlgebraKind,
    n: usize,
}

impl Algebra {
    pub fn new(kind: AlgebraKind, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidAlgebra(format!("rank n = {} is below 2", n)));
        }
        if kind == AlgebraKind::Sp && !n.is_multiple_of(2) {
            return Err(Error::InvalidAlgebra(format!("sp_{} needs even n", n)));
        }
        Ok(Algebra { kind, n })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the algebra itself.
    pub fn dim(&self) -> usize {
        let n = self.n;
        match self.kind {
            AlgebraKind::Sl => n * n - 1,
            AlgebraKind::So => n * (n - 1) / 2,
            AlgebraKind::Sp => n * (n + 1) / 2,
        }
    }

    /// The form parity, `None` for `sl`.
    pub fn epsilon(&self) -> Option<Epsilon> {
        match self.kind {
            AlgebraKind::Sl => None,
            AlgebraKind::So => Some(Epsilon::Orthogonal),
            AlgebraKind::Sp => Some(Epsilon::Symplectic),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            AlgebraKind::Sl => "sl",
            AlgebraKind::So => "so",
            AlgebraKind::Sp => "sp",
        };
        write!(f, "{}_{}", name, self.n)
    }
}

/// A nilpotent orbit, named by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilpotentOrbit {
    algebra: Algebra,
    jordan_type: Partition,
}

impl NilpotentOrbit {
    /// Validates that the partition is a Jordan type for the algebra:
    /// it partitions `n`, and for `so`/`sp` it lies in `P_eps(n)`.
    pub fn new(algebra: Algebra, jordan_type: Partition) -> Result<Self, Error> {
        if jordan_type.total() != algebra.n {
            return Err(Error::SizeMismatch {
                left: jordan_type.total(),
                right: algebra.n,
            });
        }
        if let Some(eps) = algebra.epsilon() {
            if !in_p_epsilon(&jordan_type, eps) {
                return Err(Error::NotAJordanType {
                    algebra: format!("{}", algebra),
                });
            }
        }
        Ok(NilpotentOrbit {
            algebra,
            jordan_type,
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_{} in {}", self.jordan_type, self.algebra)
    }
}

/// Classification of the birational map between two resolutions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Globally an isomorphism.
    Isomorphism,
    /// Isomorphism in codimension 2.
    IsoCodim2,
    /// Mukai elementary transformation in codimension 2, with the Jordan
    /// type of the orbit over which the transformation is centered.
    Met { center: Partition },
}

/// Orbit dimension by the dual-partition formulas.
pub fn orbit_dim(orbit: &NilpotentOrbit) -> usize {
    let n = orbit.algebra.n;
    let d = &orbit.jordan_type;
    let sq: usize = d.dual().parts().iter().map(|&c| c * c).sum();
    let odd = d.parts().iter().filter(|&&p| p % 2 == 1).count();
    match orbit.algebra.kind {
        AlgebraKind::Sl => n * n - sq,
        AlgebraKind::So => (n * n - n) / 2 - (sq - odd) / 2,
        AlgebraKind::Sp => (n * n + n) / 2 - (sq + odd) / 2,
    }
}

/// Default cap for [`centralizer_dim_oracle`].
pub const ORACLE_CAP: usize = 10;

/// Independent orbit-dimension oracle.
///
/// Builds an explicit nilpotent `x` of the orbit's Jordan type inside the
/// algebra and returns the rank of `y -> [x, y]` on an explicit basis of
/// the algebra, which equals `dim(algebra) - dim centralizer = dim O`.
/// Everything runs over exact rationals.
pub fn centralizer_dim_oracle(orbit: &NilpotentOrbit, cap: usize) -> Result<usize, Error> {
    let n = orbit.algebra.n;
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    let f = Rationals;
    // Representative and algebra basis are built against the same bilinear
    // form, the one adapted to the orbit's block layout.
    let (x, basis) = match orbit.algebra.kind {
        AlgebraKind::Sl => (sl_representative(&orbit.jordan_type, n), sl_basis(n)),
        AlgebraKind::So | AlgebraKind::Sp => {
            let eps = orbit.algebra.epsilon().expect("so/sp");
            let layout = block_layout(&orbit.jordan_type, eps)?;
            let b = gram_matrix(&layout, n, eps);
            let x = layout_representative(&layout, n);
            let xt = linalg::transpose(&x);
            let lhs = linalg::mat_mul(&f, &xt, &b)?;
            let rhs = linalg::mat_mul(&f, &b, &x)?;
            for r in 0..n {
                for c in 0..n {
                    if f.add(lhs.at(r, c), rhs.at(r, c)) != rat(0) {
                        return Err(Error::Inconsistency(String::from(
                            "representative is not skew for the adapted form",
                        )));
                    }
                }
            }
            (x, form_algebra_basis(&b, n)?)
        }
    };
    if basis.len() != orbit.algebra.dim() {
        return Err(Error::Inconsistency(format!(
            "algebra basis has {} elements, expected {}",
            basis.len(),
            orbit.algebra.dim()
        )));
    }
    // Columns are vec([x, y_k]); the rank is the orbit dimension.
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(basis.len());
    for y in &basis {
        let xy = linalg::mat_mul(&f, &x, y)?;
        let yx = linalg::mat_mul(&f, y, &x)?;
        let bracket = linalg::mat_sub(&f, &xy, &yx)?;
        columns.push((0..n).flat_map(|r| bracket.row(r).to_vec()).collect());
    }
    let m = linalg::transpose(&Matrix::from_rows(columns)?);
    Ok(linalg::rank(&f, &m))
}

fn sl_basis(n: usize) -> Vec<Matrix<BigRational>> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::filled(n, n, rat(0));
                m.set(i, j, rat(1));
                basis.push(m);
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = Matrix::filled(n, n, rat(0));
        m.set(i, i, rat(1));
        m.set(i + 1, i + 1, rat(-1));
        basis.push(m);
    }
    basis
}

/// Basis of `{ y : y^T B + B y = 0 }` by exact nullspace computation.
fn form_algebra_basis(
    b: &Matrix<BigRational>,
    n: usize,
) -> Result<Vec<Matrix<BigRational>>, Error> {
    let f = Rationals;
    let mut cond = Matrix::filled(n * n, n * n, rat(0));
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for a in 0..n {
                // (y^T B)_{ij} = sum_k y_{ki} B_{kj}: y_{a i} carries B_{a j}.
                let col1 = a * n + i;
                let v = f.add(cond.at(row, col1), b.at(a, j));
                cond.set(row, col1, v);
                // (B y)_{ij} = sum_k B_{ik} y_{kj}: y_{a j} carries B_{i a}.
                let col2 = a * n + j;
                let v = f.add(cond.at(row, col2), b.at(i, a));
                cond.set(row, col2, v);
            }
        }
    }
    linalg::nullspace(&f, &cond)
        .into_iter()
        .map(|v| Matrix::from_rows((0..n).map(|r| v[r * n..(r + 1) * n].to_vec()).collect()))
        .collect()
}

/// Jordan block layout: for each block, its size and whether it is the
/// first half of a paired block.
#[derive(Debug, Clone, Copy)]
enum Block {
    Single(usize),
    Paired(usize),
}

/// Splits the Jordan type into single and paired blocks: parts of parity
/// opposite to the form must pair up (guaranteed by `P_eps` membership).
fn block_layout(d: &Partition, eps: Epsilon) -> Result<Vec<Block>, Error> {
    let single_parity = match eps {
        // Symmetric form restricts to a single Jordan block of odd size,
        // antisymmetric to one of even size.
        Epsilon::Orthogonal => 1,
        Epsilon::Symplectic => 0,
    };
    let mut blocks = Vec::new();
    let mut i = 0;
    let parts = d.parts();
    while i < parts.len() {
        let m = parts[i];
        if m % 2 == single_parity {
            blocks.push(Block::Single(m));
            i += 1;
        } else {
            if i + 1 >= parts.len() || parts[i + 1] != m {
                return Err(Error::NotAJordanType {
                    algebra: format!("eps = {}", eps.parity()),
                });
            }
            blocks.push(Block::Paired(m));
            i += 2;
        }
    }
    Ok(blocks)
}

/// Gram matrix of the standard form adapted to a block layout.
fn gram_matrix(blocks: &[Block], n: usize, eps: Epsilon) -> Matrix<BigRational> {
    let sign = match eps {
        Epsilon::Orthogonal => 1i64,
        Epsilon::Symplectic => -1i64,
    };
    let mut b = Matrix::filled(n, n, rat(0));
    let mut offset = 0;
    for block in blocks {
        match *block {
            Block::Single(m) => {
                // <v_i, v_j> = (-1)^i when i + j = m + 1 (1-based).
                for a in 0..m {
                    let c = m - 1 - a;
                    b.set(offset + a, offset + c, rat(if a % 2 == 0 { -1 } else { 1 }));
                }
                offset += m;
            }
            Block::Paired(m) => {
                for a in 0..m {
                    let c = m - 1 - a;
                    let v = if a % 2 == 0 { -1 } else { 1 };
                    b.set(offset + a, offset + m + c, rat(v));
                    b.set(offset + m + c, offset + a, rat(sign * v));
                }
                offset += 2 * m;
            }
        }
    }
    debug_assert_eq!(offset, n);
    b
}

/// Jordan shift blocks for `sl_n`, one per part.
fn sl_representative(d: &Partition, n: usize) -> Matrix<BigRational> {
    let mut x = Matrix::filled(n, n, rat(0));
    let mut offset = 0;
    for &m in d.parts() {
        for a in 1..m {
            x.set(offset + a - 1, offset + a, rat(1));
        }
        offset += m;
    }
    x
}

/// Jordan shift blocks following a block layout (each paired block carries
/// two shift copies).
fn layout_representative(blocks: &[Block], n: usize) -> Matrix<BigRational> {
    let mut x = Matrix::filled(n, n, rat(0));
    let mut offset = 0;
    for block in blocks {
        match *block {
            Block::Single(m) => {
                for a in 1..m {
                    x.set(offset + a - 1, offset + a, rat(1));
                }
                offset += m;
            }
            Block::Paired(m) => {
                for half in 0..2 {
                    for a in 1..m {
                        x.set(offset + half * m + a - 1, offset + half * m + a, rat(1));
                    }
                }
                offset += 2 * m;
            }
        }
    }
    x
}

/// Closure strata: all Jordan types of orbits in the closure, i.e. all
/// partitions of `n` dominated by the Jordan type (intersected with
/// `P_eps(n)` for `so`/`sp`), sorted by decreasing orbit dimension.
///
/// For `so`/`sp` this uses dominance restricted to `P_eps(n)`; the
/// collapse of adjacent non-special pairs is ignored, which is enough at
/// this scale.
pub fn closure_strata(orbit: &NilpotentOrbit) -> Vec<Partition> {
    let n = orbit.algebra.n;
    let eps = orbit.algebra.epsilon();
    let mut strata: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|e| orbit.jordan_type.dominates(e).unwrap_or(false))
        .filter(|e| eps.is_none_or(|eps| in_p_epsilon(e, eps)))
        .collect();
    strata.sort_by(|a, b| {
        let da = orbit_dim(&NilpotentOrbit {
            algebra: orbit.algebra,
            jordan_type: a.clone(),
        });
        let db = orbit_dim(&NilpotentOrbit {
            algebra: orbit.algebra,
            jordan_type: b.clone(),
        });
        db.cmp(&da).then_with(|| b.parts().cmp(a.parts()))
    });
    strata
}

/// Classification of the birational map between the two resolutions
/// `T*G(k, n) -> closure(O) <- T*G(n-k, n)` of the two-column orbit
/// `O_{[2^k, 1^{n-2k}]}` in `sl_n`.
pub fn two_column_classify(k: usize, n: usize) -> Result<EdgeClass, Error> {
    if k < 1 || 2 * k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k and 2k <= n, got k = {}, n = {}",
            k, n
        )));
    }
    if n == 2 * k {
        Ok(EdgeClass::Isomorphism)
    } else if n == 2 * k + 1 {
        let mut parts = alloc::vec![2usize; k - 1];
        parts.extend([1, 1, 1]);
        Ok(EdgeClass::Met {
            center: Partition::from_parts(parts).expect("nonempty"),
        })
    } else {
        Ok(EdgeClass::IsoCodim2)
    }
}

/// The type-D flop `T*G_iso^+(k) --> T*G_iso^-(k)` over the closure of
/// `O_{[2^{k-1}, 1^2]}` in `so_{2k}`, `k >= 3` odd: always an isomorphism
/// in codimension 2.
pub fn type_d_flop_classify(k: usize) -> Result<EdgeClass, Error> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "type D flop needs odd k >= 3, got k = {}",
            k
        )));
    }
    Ok(EdgeClass::IsoCodim2)
}

/// Dimension of the fiber `G(k - i, n - 2i)` of `T*G(k, n) -> closure(O)`
/// over a point of the stratum `O_{[2^i, 1^{n-2i}]}`.
pub fn stratum_fiber_dim(k: usize, n: usize, i: usize) -> Result<usize, Error> {
    if i > k || k + i > n {
        return Err(Error::Precondition(format!(
            "need i <= k and k + i <= n, got k = {}, n = {}, i = {}",
            k, n, i
        )));
    }
    Ok((k - i) * (n - k - i))
}
