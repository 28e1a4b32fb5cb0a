//! Exact arithmetic in the cyclotomic field `Q(zeta_m)`.
//!
//! Elements are rational coefficient vectors in the power basis
//! `1, zeta, ..., zeta^{phi(m)-1}`, always reduced modulo the m-th
//! cyclotomic polynomial, so equality is coefficient equality. The
//! cyclotomic polynomial itself is computed by dividing `x^m - 1` by the
//! cyclotomic polynomials of the proper divisors of `m`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::FieldOps;

/// The monic m-th cyclotomic polynomial as integer coefficients,
/// constant term first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<BigInt> {
    assert!(m >= 1, "order must be positive");
    let mut cache: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for d in 1..=m {
        if !m.is_multiple_of(d) {
            continue;
        }
        // x^d - 1 divided by Phi_e for every proper divisor e of d.
        let mut poly = vec![BigInt::zero(); d + 1];
        poly[0] = -BigInt::one();
        poly[d] = BigInt::one();
        for (e, phi) in cache.range(..d) {
            if d % e == 0 {
                poly = int_poly_div_exact(&poly, phi);
            }
        }
        cache.insert(d, poly);
    }
    cache.remove(&m).expect("m is its own divisor")
}

/// Exact division of integer polynomials by a monic divisor.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(BigInt::is_one).unwrap_or(false));
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (dn..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dn] = c.clone();
        for (k, dk) in den.iter().enumerate() {
            let v = &rem[i - dn + k] - &c * dk;
            rem[i - dn + k] = v;
        }
    }
    debug_assert!(rem.iter().all(BigInt::is_zero), "division must be exact");
    quot
}

/// Euler's totient, the degree of `Phi_m`.
pub fn euler_phi(m: usize) -> usize {
    let mut result = m;
    let mut m = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of `Q(zeta_m)`; the coefficient vector always has length
/// equal to the degree of `Phi_m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cyclo {
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})z", c)?,
                _ => write!(f, "({})z^{}", c, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The field `Q(zeta_m)`: holds the modulus and performs all arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloField {
    order: usize,
    // Monic Phi_m, constant term first, rational coefficients.
    modulus: Vec<BigRational>,
}

impl CycloField {
    pub fn new(order: usize) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::Precondition(alloc::string::String::from(
                "cyclotomic order must be positive",
            )));
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from)
            .collect();
        debug_assert_eq!(modulus.len() - 1, euler_phi(order));
        Ok(CycloField { order, modulus })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Degree of the extension, `phi(order)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Builds an element from arbitrary-length power-basis coefficients,
    /// reducing modulo `Phi_m`.
    pub fn element(&self, coeffs: Vec<BigRational>) -> Cyclo {
        let mut c = coeffs;
        self.reduce(&mut c);
        Cyclo { coeffs: c }
    }

    pub fn from_rational(&self, v: BigRational) -> Cyclo {
        self.element(vec![v])
    }

    pub fn from_int(&self, v: i64) -> Cyclo {
        self.from_rational(BigRational::from(BigInt::from(v)))
    }

    /// The primitive root `zeta_m` itself.
    pub fn root(&self) -> Cyclo {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduce a coefficient vector modulo the monic modulus and pad to
    /// the fixed degree.
    fn reduce(&self, coeffs: &mut Vec<BigRational>) {
        let deg = self.degree();
        while coeffs.len() > deg {
            let lead = coeffs.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = coeffs.len() - deg;
            for k in 0..deg {
                let v = &coeffs[shift + k] - &lead * &self.modulus[k];
                coeffs[shift + k] = v;
            }
        }
        coeffs.resize(deg, BigRational::zero());
    }
}

impl FieldOps for CycloField {
    type Elem = Cyclo;

    fn zero(&self) -> Cyclo {
        Cyclo {
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    fn one(&self) -> Cyclo {
        self.from_int(1)
    }

    fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let deg = self.degree();
        if deg == 0 {
            return self.zero();
        }
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let v = &prod[i + j] + x * y;
                prod[i + j] = v;
            }
        }
        self.element(prod)
    }

    fn inv(&self, a: &Cyclo) -> Option<Cyclo> {
        if self.is_zero(a) {
            return None;
        }
        // Extended Euclid in Q[x]: Phi_m is irreducible, so
        // gcd(a, Phi_m) is a nonzero constant c with u a + v Phi = c.
        let mut r0: Vec<BigRational> = self.modulus.clone();
        let mut r1: Vec<BigRational> = trim(a.coeffs.clone());
        let mut u0: Vec<BigRational> = vec![];
        let mut u1: Vec<BigRational> = vec![BigRational::one()];
        while poly_deg(&r1) > 0 {
            let (q, r) = poly_divmod(&r0, &r1);
            let next_u = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = next_u;
        }
        // r1 is the constant gcd; a nonzero element of a field extension
        // cannot share a factor with the irreducible modulus.
        let c = r1.first().cloned().unwrap_or_else(BigRational::zero);
        if c.is_zero() {
            return None;
        }
        let inv_c = c.recip();
        let scaled = u1.into_iter().map(|v| v * &inv_c).collect();
        Some(self.element(scaled))
    }

    fn is_zero(&self, a: &Cyclo) -> bool {
        a.coeffs.iter().all(BigRational::is_zero)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().map(BigRational::is_zero).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_deg(p: &[BigRational]) -> isize {
    p.len() as isize - 1
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    trim(out)
}

/// Quotient and remainder in `Q[x]`; the divisor must be nonzero.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = trim(den.to_vec());
    let lead = den.last().expect("divisor nonzero");
    let mut rem = trim(num.to_vec());
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() && !rem.is_empty() {
        let c = rem.last().expect("nonempty") / lead;
        let shift = rem.len() - den.len();
        quot[shift] = c.clone();
        for (k, dk) in den.iter().enumerate() {
            let v = &rem[shift + k] - &c * dk;
            rem[shift + k] = v;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ints(p: &[i64]) -> Vec<BigInt> {
        p.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // First order with a coefficient outside {-1, 0, 1}.
        let phi105 = cyclotomic_polynomial(105);
        assert_eq!(phi105.len() - 1, euler_phi(105));
        assert_eq!(phi105[7], BigInt::from(-2));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let f = CycloField::new(4).unwrap();
        let i = f.root();
        assert_eq!(f.mul(&i, &i), f.from_int(-1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let f = CycloField::new(3).unwrap();
        let z = f.root();
        let z2 = f.mul(&z, &z);
        assert_eq!(f.add(&z, &z2), f.from_int(-1));
    }

    #[test]
    fn order_one_is_plain_rational_arithmetic() {
        let f = CycloField::new(1).unwrap();
        assert_eq!(f.degree(), 1);
        let a = f.from_rational(rat(1) / rat(2));
        let b = f.from_rational(rat(1) / rat(3));
        assert_eq!(f.add(&a, &b), f.from_rational(rat(5) / rat(6)));
        assert_eq!(f.inv(&a).unwrap(), f.from_int(2));
    }

    #[test]
    fn inverses_round_trip() {
        for m in [1usize, 2, 3, 4, 5, 8, 12] {
            let f = CycloField::new(m).unwrap();
            let z = f.root();
            let mut v = f.from_int(7);
            for _ in 0..m {
                v = f.mul(&v, &z);
                let w = f.add(&v, &f.from_int(3));
                if f.is_zero(&w) {
                    continue;
                }
                let inv = f.inv(&w).unwrap();
                assert_eq!(f.mul(&w, &inv), f.one(), "m = {}", m);
            }
        }
        assert!(CycloField::new(4)
            .unwrap()
            .inv(&CycloField::new(4).unwrap().zero())
            .is_none());
    }

    #[test]
    fn root_has_multiplicative_order_m() {
        for m in [2usize, 3, 4, 6, 8, 9, 12] {
            let f = CycloField::new(m).unwrap();
            let z = f.root();
            let mut power = f.one();
            for step in 1..=m {
                power = f.mul(&power, &z);
                if step < m {
                    assert_ne!(power, f.one(), "zeta_{} has early order {}", m, step);
                }
            }
            assert_eq!(power, f.one());
        }
    }
}
