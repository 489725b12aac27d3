//! Exact univariate polynomial algebra over ℤ and ℚ.
//!
//! Dense representation throughout: every polynomial in play here has degree
//! at most a few hundred (cyclotomic polynomials and characteristic
//! polynomials of small number fields), so sparse forms buy nothing.
//!
//! The module provides the four operations the witness machinery is built on:
//!
//! * [`cyclotomic`] — Φₙ by exact division of `Xⁿ−1` by the proper-divisor
//!   cyclotomics;
//! * [`real_cyclotomic`] — the minimal polynomial ψ₂ₘ of `2·cos(π/m)`,
//!   extracted from the palindromic Φ₂ₘ through the trace basis
//!   `X^j + X^{−j}`;
//! * [`resultant`] — exact resultants via the Euclidean remainder formula
//!   over ℚ;
//! * [`bezout_reduction`] / [`modulus_bound`] — integer cofactors `A_d, B_d`
//!   with `A_d·Φₙ + B_d·(X^d−1) = N_d`, and their least common multiple
//!   `N(n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cyclotomic index must be >= 1")]
    CyclotomicIndexZero,
    #[error("real cyclotomic requires m > 2, got {0}")]
    RealCyclotomicRange(u64),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("{d} is not a proper divisor of {n}")]
    NotProperDivisor { n: u64, d: u64 },
    #[error("exact division failed (nonzero remainder)")]
    InexactDivision,
}

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `X^i`; the top coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// `c·X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `Xⁿ − 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division: returns `self / divisor` when the remainder is zero
    /// and every intermediate coefficient division is exact.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(PolyError::InexactDivision);
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[k + j] -= t;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dense polynomial with rational coefficients, each stored in lowest terms
/// with positive denominator (num-rational's canonical form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Field division with remainder: `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (RatPoly::zero(), self.clone());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[k + j] -= t;
            }
            quot[k] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·rhs = g`,
    /// `g` the monic gcd. For coprime inputs the cofactors satisfy
    /// `deg s < deg rhs` and `deg t < deg self`.
    pub fn extended_gcd(&self, rhs: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = RatPoly::constant(BigRational::one());
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::constant(BigRational::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv_lead = BigRational::one() / r0.leading().unwrap().clone();
        (
            r0.scale(&inv_lead),
            s0.scale(&inv_lead),
            t0.scale(&inv_lead),
        )
    }

    /// Smallest positive integer `λ` with `λ·self ∈ ℤ[X]`, together with the
    /// cleared polynomial.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let cleared = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        );
        (lcm, cleared)
    }

    /// Returns the integer polynomial if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IntPoly::new(out))
    }
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n0 = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n0 {
        if n0 % p == 0 {
            while n0 % p == 0 {
                n0 /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n0 > 1 {
        phi -= phi / n0;
    }
    phi
}

/// The n-th cyclotomic polynomial Φₙ, monic of degree φ(n).
///
/// Computed by exact division: Φₙ = (Xⁿ−1) / ∏_{d|n, d<n} Φ_d.
pub fn cyclotomic(n: u64) -> Result<IntPoly, PolyError> {
    if n == 0 {
        return Err(PolyError::CyclotomicIndexZero);
    }
    if n == 1 {
        return Ok(IntPoly::from_i64(&[-1, 1]));
    }
    let mut quotient = IntPoly::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d)?;
        quotient = quotient.exact_div(&phi_d)?;
    }
    Ok(quotient)
}

/// Minimal polynomial ψ₂ₘ of τ = 2·cos(π/m) over ℚ, monic of degree φ(2m)/2.
///
/// Φ₂ₘ is palindromic of even degree 2k for m > 2, so
/// `X^{−k}·Φ₂ₘ(X) = a_k + Σ_{j=1..k} a_{k+j}·(X^j + X^{−j})`, and substituting
/// the trace polynomials `D_j` (D₀=2, D₁=Y, D_{j+1}=Y·D_j−D_{j−1}, so that
/// `X^j + X^{−j} = D_j(X + X^{−1})`) yields ψ₂ₘ with integer coefficients.
/// The defining identity `Φ₂ₘ(X) = X^k·ψ₂ₘ(X + X^{−1})` holds exactly.
pub fn real_cyclotomic(m: u64) -> Result<IntPoly, PolyError> {
    if m <= 2 {
        return Err(PolyError::RealCyclotomicRange(m));
    }
    let phi = cyclotomic(2 * m)?;
    let deg = phi.degree().unwrap();
    debug_assert!(deg % 2 == 0);
    let k = deg / 2;
    // trace polynomials D_0..D_k
    let mut d_polys: Vec<IntPoly> = Vec::with_capacity(k + 1);
    d_polys.push(IntPoly::constant(BigInt::from(2)));
    if k >= 1 {
        d_polys.push(IntPoly::x());
    }
    for j in 2..=k {
        let next = IntPoly::x()
            .mul(&d_polys[j - 1])
            .sub(&d_polys[j - 2]);
        d_polys.push(next);
    }
    let mut psi = IntPoly::constant(phi.coeff(k));
    for j in 1..=k {
        psi = psi.add(&d_polys[j].scale(&phi.coeff(k + j)));
    }
    Ok(psi)
}

/// Resultant of two nonzero integer polynomials.
///
/// Sign convention: `Res(P,Q) = lc(P)^{deg Q} · ∏ Q(αᵢ)` over the roots αᵢ of
/// `P` — the Sylvester-determinant normalization, equal to
/// `lc(P)^{deg Q}·lc(Q)^{deg P}·∏_{i,j}(αᵢ−βⱼ)`. Only |Res| matters to the
/// witness machinery; the convention is fixed so tests can pin exact values
/// (e.g. `Res(X−2, X−5) = −3`).
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let r = resultant_rat(&p.to_rational(), &q.to_rational());
    debug_assert!(r.denom().is_one());
    Ok(r.numer().clone())
}

/// Euclidean-remainder resultant over ℚ. Both inputs nonzero.
fn resultant_rat(p: &RatPoly, q: &RatPoly) -> BigRational {
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp == 0 {
        return pow_rat(p.leading().unwrap(), dq);
    }
    if dq == 0 {
        return pow_rat(q.leading().unwrap(), dp);
    }
    // Res(P,Q) = (−1)^{dp·dq} · lc(Q)^{dp − deg R} · Res(Q, R),  R = P mod Q
    let (_, r) = p.div_rem(q);
    if r.is_zero() {
        return BigRational::zero();
    }
    let dr = r.degree().unwrap();
    let sign = if (dp * dq) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    sign * pow_rat(q.leading().unwrap(), dp - dr) * resultant_rat(q, &r)
}

fn pow_rat(base: &BigRational, exp: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// One Bézout relation `A_d·Φₙ + B_d·(X^d−1) = N_d` for a proper divisor `d`
/// of `n`, with integer cofactors and `N_d = Res(Φₙ, X^d−1) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutEntry {
    pub d: u64,
    pub a: IntPoly,
    pub b: IntPoly,
    pub n_d: BigInt,
}

/// The full family of Bézout relations for `n`, plus the common multiple
/// `N(n) = lcm_d |N_d|` whose prime divisors are exactly the primes that can
/// collapse the order of an n-th root of unity under reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicBezout {
    pub n: u64,
    pub entries: Vec<BezoutEntry>,
    pub bound: BigInt,
}

/// Integer Bézout data for `(Φₙ, X^d−1)`.
///
/// Extended Euclid over ℚ[X] gives `s·Φₙ + t·(X^d−1) = 1` with
/// `deg s < d`, `deg t < φ(n)`; scaling by `N_d = Res(Φₙ, X^d−1)` produces
/// the unique cofactor pair within those degree bounds, which is integral by
/// Cramer's rule on the Sylvester matrix.
pub fn bezout_reduction(n: u64, d: u64) -> Result<BezoutEntry, PolyError> {
    if n <= 1 || d == 0 || d >= n || n % d != 0 {
        return Err(PolyError::NotProperDivisor { n, d });
    }
    let phi = cyclotomic(n)?;
    let xd = IntPoly::x_pow_minus_one(d as usize);
    let n_d = resultant(&phi, &xd)?;
    debug_assert!(!n_d.is_zero(), "Φ_n and X^d−1 must be coprime");
    let (g, s, t) = phi.to_rational().extended_gcd(&xd.to_rational());
    debug_assert_eq!(g.degree(), Some(0));
    let scale = BigRational::from_integer(n_d.clone());
    let a = s
        .scale(&scale)
        .to_integer()
        .expect("resultant-scaled cofactor is integral");
    let b = t
        .scale(&scale)
        .to_integer()
        .expect("resultant-scaled cofactor is integral");
    // exact identity check
    let lhs = a.mul(&phi).add(&b.mul(&xd));
    debug_assert_eq!(lhs, IntPoly::constant(n_d.clone()));
    Ok(BezoutEntry { d, a, b, n_d })
}

/// `N(n)`: least common multiple of |N_d| over the proper divisors d of n.
pub fn modulus_bound(n: u64) -> Result<CyclotomicBezout, PolyError> {
    if n <= 1 {
        return Err(PolyError::NotProperDivisor { n, d: 0 });
    }
    let mut entries = Vec::new();
    let mut bound = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let entry = bezout_reduction(n, d)?;
        bound = bound.lcm(&entry.n_d.abs());
        entries.push(entry);
    }
    Ok(CyclotomicBezout { n, entries, bound })
}

/// Memoized `N(2m)` context shared by witness sweeps.
#[derive(Debug, Clone)]
pub struct RealCyclotomicContext {
    pub m: u64,
    pub n: u64,
    pub psi: Arc<IntPoly>,
    pub bezout: Arc<CyclotomicBezout>,
    /// ascending prime divisors of 2·N(2m)
    pub excluded_primes: Vec<u64>,
}

impl RealCyclotomicContext {
    pub fn new(m: u64) -> Result<Self, PolyError> {
        let psi = real_cyclotomic(m)?;
        let bezout = modulus_bound(2 * m)?;
        let excluded_primes = prime_divisors_small(&(BigInt::from(2) * &bezout.bound));
        Ok(RealCyclotomicContext {
            m,
            n: 2 * m,
            psi: Arc::new(psi),
            bezout: Arc::new(bezout),
            excluded_primes,
        })
    }
}

/// Prime divisors of a positive integer all of whose prime factors are small
/// (the N(n) values: every prime divisor of N(n) divides n).
pub fn prime_divisors_small(value: &BigInt) -> Vec<u64> {
    let mut v = value.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= v {
        if (&v % &p).is_zero() {
            out.push(p.to_string().parse::<u64>().unwrap());
            while (&v % &p).is_zero() {
                v = v / &p;
            }
        }
        p += 1;
    }
    if v > BigInt::one() {
        out.push(v.to_string().parse::<u64>().unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(p: &[i64]) -> IntPoly {
        IntPoly::from_i64(p)
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1).unwrap(), int(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), int(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), int(&[1, -1, 1]));
        assert_eq!(cyclotomic(8).unwrap(), int(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), int(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for n in 1..=80u64 {
            assert_eq!(
                cyclotomic(n).unwrap().degree().unwrap() as u64,
                euler_phi(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn cyclotomic_product_identity() {
        for n in 1..=60u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n={n}");
        }
    }

    #[test]
    fn real_cyclotomic_small() {
        // 2cos(pi/3)=1, 2cos(pi/4)=sqrt2, 2cos(pi/5)=golden ratio
        assert_eq!(real_cyclotomic(3).unwrap(), int(&[-1, 1]));
        assert_eq!(real_cyclotomic(4).unwrap(), int(&[-2, 0, 1]));
        assert_eq!(real_cyclotomic(5).unwrap(), int(&[-1, -1, 1]));
        assert_eq!(real_cyclotomic(6).unwrap(), int(&[-3, 0, 1]));
        assert!(real_cyclotomic(2).is_err());
        assert!(real_cyclotomic(0).is_err());
    }

    /// Expand X^k·ψ(X + 1/X) as an integer polynomial: Σ c_j X^{k−j}(X²+1)^j.
    fn phi_transform(psi: &IntPoly, k: usize) -> IntPoly {
        let x2p1 = int(&[1, 0, 1]);
        let mut acc = IntPoly::zero();
        let mut pow = IntPoly::one(); // (X²+1)^j
        for j in 0..psi.coeffs().len() {
            let term = pow
                .scale(&psi.coeff(j))
                .mul(&IntPoly::monomial(BigInt::one(), k - j));
            acc = acc.add(&term);
            pow = pow.mul(&x2p1);
        }
        acc
    }

    #[test]
    fn real_cyclotomic_transform_identity() {
        for m in 3..=25u64 {
            let psi = real_cyclotomic(m).unwrap();
            let k = psi.degree().unwrap();
            assert_eq!(
                phi_transform(&psi, k),
                cyclotomic(2 * m).unwrap(),
                "m={m}"
            );
        }
    }

    #[test]
    fn resultant_fixed_values() {
        // Res(X−2, X−5) = 2−5 = −3 under the product convention
        assert_eq!(
            resultant(&int(&[-2, 1]), &int(&[-5, 1])).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(
            resultant(&int(&[1, 0, 1]), &int(&[-1, 1])).unwrap(),
            BigInt::from(2)
        );
        let phi6 = cyclotomic(6).unwrap();
        assert_eq!(
            resultant(&phi6, &IntPoly::x_pow_minus_one(3)).unwrap(),
            BigInt::from(4)
        );
        assert!(resultant(&IntPoly::zero(), &int(&[1])).is_err());
    }

    /// Root-product oracle on split polynomials: ∏(aᵢ−bⱼ) with unit leading
    /// coefficients.
    #[test]
    fn resultant_root_product_oracle() {
        let cases: [(&[i64], &[i64]); 4] = [
            (&[1, 2], &[3]),
            (&[1, 2, 3], &[4, 5]),
            (&[-2, 0, 5], &[1, 1]),
            (&[0, 1, -1, 2], &[2, -3]),
        ];
        for (roots_p, roots_q) in cases {
            let p = poly_from_roots(roots_p);
            let q = poly_from_roots(roots_q);
            let mut expect = BigInt::one();
            for a in roots_p {
                for b in roots_q {
                    expect *= BigInt::from(a - b);
                }
            }
            assert_eq!(resultant(&p, &q).unwrap(), expect, "{roots_p:?} {roots_q:?}");
        }
    }

    fn poly_from_roots(roots: &[i64]) -> IntPoly {
        let mut acc = IntPoly::one();
        for &r in roots {
            acc = acc.mul(&int(&[-r, 1]));
        }
        acc
    }

    #[test]
    fn resultant_swap_sign() {
        let p = int(&[3, 1, 2]);
        let q = int(&[-1, 4, 0, 1]);
        let rp = resultant(&p, &q).unwrap();
        let rq = resultant(&q, &p).unwrap();
        // sign (−1)^{deg P · deg Q}
        assert_eq!(rp, rq); // 2*3 even
        let p1 = int(&[-2, 1]); // deg 1
        let q1 = int(&[7, 3, 0, 1]); // deg 3
        assert_eq!(
            resultant(&p1, &q1).unwrap(),
            -resultant(&q1, &p1).unwrap()
        );
    }

    #[test]
    fn resultant_zero_iff_common_factor() {
        let common = int(&[1, 1]);
        let p = common.mul(&int(&[2, 3]));
        let q = common.mul(&int(&[-1, 0, 1]));
        assert!(resultant(&p, &q).unwrap().is_zero());
        assert!(!resultant(&int(&[1, 1]), &int(&[1, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn bezout_identity_exact() {
        for (n, d, expect) in [(6u64, 1u64, 1i64), (6, 2, 3), (8, 4, 16)] {
            let e = bezout_reduction(n, d).unwrap();
            assert_eq!(e.n_d.abs(), BigInt::from(expect), "n={n} d={d}");
            let phi = cyclotomic(n).unwrap();
            let xd = IntPoly::x_pow_minus_one(d as usize);
            assert_eq!(
                e.a.mul(&phi).add(&e.b.mul(&xd)),
                IntPoly::constant(e.n_d.clone())
            );
        }
        assert!(bezout_reduction(6, 4).is_err());
        assert!(bezout_reduction(6, 6).is_err());
    }

    #[test]
    fn modulus_bound_spot_values() {
        assert_eq!(modulus_bound(4).unwrap().bound, BigInt::from(4));
        assert_eq!(modulus_bound(6).unwrap().bound, BigInt::from(12));
        assert_eq!(modulus_bound(8).unwrap().bound, BigInt::from(16));
    }

    #[test]
    fn modulus_bound_divisibility() {
        for n in 2..=30u64 {
            let cb = modulus_bound(n).unwrap();
            for e in &cb.entries {
                assert!(!e.n_d.is_zero());
                assert!((&cb.bound % e.n_d.abs()).is_zero(), "n={n} d={}", e.d);
            }
            assert!(cb.bound > BigInt::zero());
        }
    }

    #[test]
    fn exact_div_rejects_inexact() {
        let p = int(&[1, 0, 1]);
        let q = int(&[1, 1]);
        assert!(p.exact_div(&q).is_err());
        assert_eq!(p.mul(&q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn prime_divisors_of_small_values() {
        assert_eq!(prime_divisors_small(&BigInt::from(24)), vec![2, 3]);
        assert_eq!(prime_divisors_small(&BigInt::from(1)), Vec::<u64>::new());
        assert_eq!(prime_divisors_small(&BigInt::from(-90)), vec![2, 3, 5]);
    }
}
