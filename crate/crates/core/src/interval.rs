//! Certified enclosures over exact rationals.
//!
//! [`RealInterval`] is a closed interval with rational endpoints;
//! [`ComplexBall`] is a disk with rational center and radius. Operations
//! never round silently: endpoints stay exact unless [`RealInterval::round_out`]
//! (or [`ComplexBall::round`]) is called, which rounds outward to dyadics of
//! a requested bit size. Logarithms and square-root bounds carry explicit
//! truncation-error terms, so every returned enclosure is sound.

use crate::{rat_int, Error, Rat, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Largest dyadic with denominator `2^bits` that is `<= r`.
pub fn dyadic_floor(r: &Rat, bits: u32) -> Rat {
    let scaled = r.numer() * pow2(bits);
    Rat::new(scaled.div_floor(r.denom()), pow2(bits))
}

/// Smallest dyadic with denominator `2^bits` that is `>= r`.
pub fn dyadic_ceil(r: &Rat, bits: u32) -> Rat {
    let scaled = r.numer() * pow2(bits);
    Rat::new(scaled.div_ceil(r.denom()), pow2(bits))
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RealInterval {
    lo: Rat,
    hi: Rat,
}

impl RealInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        RealInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, r: &Rat) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Certified `self > r` (every point of the interval exceeds `r`).
    pub fn certainly_gt(&self, r: &Rat) -> bool {
        self.lo > *r
    }

    /// Certified `self < r`.
    pub fn certainly_lt(&self, r: &Rat) -> bool {
        self.hi < *r
    }

    pub fn neg(&self) -> Self {
        RealInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        RealInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        RealInterval { lo: &self.lo + r, hi: &self.hi + r }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RealInterval { lo, hi }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        if r.is_negative() {
            RealInterval { lo: &self.hi * r, hi: &self.lo * r }
        } else {
            RealInterval { lo: &self.lo * r, hi: &self.hi * r }
        }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RealInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = if -&self.lo > self.hi { -self.lo.clone() } else { self.hi.clone() };
            RealInterval { lo: Rat::zero(), hi }
        }
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = RealInterval::point(Rat::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Pointwise `max(1, x)`; width never grows.
    pub fn max_with_one(&self) -> Self {
        let one = Rat::one();
        RealInterval {
            lo: if self.lo > one { self.lo.clone() } else { one.clone() },
            hi: if self.hi > one { self.hi.clone() } else { one },
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi < other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RealInterval { lo, hi })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Self) -> Self {
        let lo = if self.lo < other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() };
        RealInterval { lo, hi }
    }

    /// Round both endpoints outward to dyadics with denominator `2^bits`.
    pub fn round_out(&self, bits: u32) -> Self {
        RealInterval { lo: dyadic_floor(&self.lo, bits), hi: dyadic_ceil(&self.hi, bits) }
    }

    /// Certified natural logarithm; requires `lo > 0`. The result width is
    /// the input's relative width plus at most `2^(1-prec)`.
    pub fn ln(&self, prec: u32) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::InvalidParameters(
                "ln requires a strictly positive interval".into(),
            ));
        }
        let (lo, _) = ln_rat_bounds(&self.lo, prec)?;
        let (_, hi) = ln_rat_bounds(&self.hi, prec)?;
        Ok(RealInterval { lo, hi })
    }

    /// Decimal rendering `(center, radius)` suitable for reports.
    pub fn decimal_parts(&self, digits: usize) -> (String, String) {
        let c = self.midpoint();
        let r = self.width() / rat_int(2);
        (rat_to_decimal(&c, digits), rat_to_decimal(&r, digits))
    }
}

/// Fixed-point decimal rendering of a rational, rounded toward zero, with
/// `digits` fractional digits.
pub fn rat_to_decimal(r: &Rat, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
}

/// `(lower, upper)` rational bounds on `sqrt(x)` for `x >= 0`, with relative
/// gap below `2^-prec`.
pub fn sqrt_bounds(x: &Rat, prec: u32) -> (Rat, Rat) {
    if x.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    assert!(x.is_positive(), "sqrt of a negative rational");
    // Scale into [1/2, 2) by powers of 4 so Newton converges in few steps.
    let mut shift: i64 = 0;
    let four = rat_int(4);
    let mut y = x.clone();
    while y >= rat_int(2) {
        y /= &four;
        shift += 1;
    }
    while y < crate::rat(1, 2) {
        y *= &four;
        shift -= 1;
    }
    // u >= sqrt(y) is preserved by the Newton step (AM-GM).
    let mut u = (&y + Rat::one()) / rat_int(2);
    let steps = 3 + (32 - prec.leading_zeros());
    let work = prec + 8;
    for _ in 0..steps {
        u = (&u + &y / &u) / rat_int(2);
        u = dyadic_ceil(&u, work);
    }
    let lo = dyadic_floor(&(&y / &u), work);
    let two_pow = if shift >= 0 {
        Rat::from(BigInt::one() << (shift as usize))
    } else {
        Rat::new(BigInt::one(), BigInt::one() << ((-shift) as usize))
    };
    let lo = if lo.is_negative() { Rat::zero() } else { lo * &two_pow };
    (lo, u * &two_pow)
}

/// Upper bound on `sqrt(x)`.
pub fn sqrt_upper(x: &Rat, prec: u32) -> Rat {
    sqrt_bounds(x, prec).1
}

// atanh series: atanh(t) = sum t^(2j+1)/(2j+1), |t| < 1. Returns a partial
// sum and a bound on the truncated tail, both exact rationals.
fn atanh_partial(t: &Rat, tail_ratio_log2: u32, prec: u32) -> (Rat, Rat) {
    // Terms shrink by at least 2^-tail_ratio_log2 per step.
    let terms = (prec + 4) / tail_ratio_log2 + 2;
    let t2 = t * t;
    let mut sum = Rat::zero();
    let mut power = t.clone();
    for j in 0..terms {
        sum += &power / rat_int((2 * j + 1) as i64);
        power *= &t2;
    }
    // |tail| <= |t|^(2*terms+1) / (2*terms+1) * 1/(1 - t^2)
    let t2abs = t2.abs();
    let tail = power.abs() / rat_int((2 * terms + 1) as i64) / (Rat::one() - t2abs);
    (sum, tail)
}

// Certified bounds for ln 2 = 2 atanh(1/3).
fn ln2_bounds(prec: u32) -> (Rat, Rat) {
    let (s, tail) = atanh_partial(&crate::rat(1, 3), 3, prec + 4);
    let lo = (&s - &tail) * rat_int(2);
    let hi = (&s + &tail) * rat_int(2);
    (lo, hi)
}

/// `(lower, upper)` rational bounds on `ln x` for `x > 0`, with gap below
/// `2^-prec`.
pub fn ln_rat_bounds(x: &Rat, prec: u32) -> Result<(Rat, Rat)> {
    if !x.is_positive() {
        return Err(Error::InvalidParameters("ln of a non-positive rational".into()));
    }
    let work = prec + 12;
    // Reduce x / 2^k into [3/4, 3/2).
    let mut k: i64 = (x.numer().bits() as i64) - (x.denom().bits() as i64);
    let two = rat_int(2);
    let mut y = if k >= 0 {
        x / Rat::from(BigInt::one() << (k as usize))
    } else {
        x * Rat::from(BigInt::one() << ((-k) as usize))
    };
    while y >= crate::rat(3, 2) {
        y /= &two;
        k += 1;
    }
    while y < crate::rat(3, 4) {
        y *= &two;
        k -= 1;
    }
    // Keep the series argument small: round y outward at working precision.
    let y_lo = dyadic_floor(&y, work);
    let y_hi = dyadic_ceil(&y, work);
    // t in [-1/7, 1/5]; terms shrink by >= 2^4 per step (t^2 <= 1/25).
    let t_of = |v: &Rat| (v - Rat::one()) / (v + Rat::one());
    let (s_lo, tail_lo) = atanh_partial(&t_of(&y_lo), 4, work);
    let (s_hi, tail_hi) = atanh_partial(&t_of(&y_hi), 4, work);
    let ln_y_lo = (&s_lo - &tail_lo) * rat_int(2);
    let ln_y_hi = (&s_hi + &tail_hi) * rat_int(2);
    let (l2_lo, l2_hi) = ln2_bounds(work);
    let kr = rat_int(k);
    let (k_lo, k_hi) = if k >= 0 {
        (&kr * &l2_lo, &kr * &l2_hi)
    } else {
        (&kr * &l2_hi, &kr * &l2_lo)
    };
    Ok((
        dyadic_floor(&(ln_y_lo + k_lo), work),
        dyadic_ceil(&(ln_y_hi + k_hi), work),
    ))
}

/// Closed disk in the complex plane: center `(re, im)`, radius `rad >= 0`.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub re: Rat,
    pub im: Rat,
    pub rad: Rat,
}

impl ComplexBall {
    pub fn exact(re: Rat, im: Rat) -> Self {
        ComplexBall { re, im, rad: Rat::zero() }
    }

    pub fn new(re: Rat, im: Rat, rad: Rat) -> Self {
        assert!(!rad.is_negative());
        ComplexBall { re, im, rad }
    }

    pub fn center_norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn contains_zero(&self) -> bool {
        self.center_norm_sq() <= &self.rad * &self.rad
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexBall {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
            rad: &self.rad + &other.rad,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexBall {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
            rad: &self.rad + &other.rad,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = &self.re * &other.re - &self.im * &other.im;
        let im = &self.re * &other.im + &self.im * &other.re;
        // |c1|r2 + |c2|r1 + r1 r2, using cheap sqrt upper bounds.
        let n1 = sqrt_upper(&self.center_norm_sq(), 24);
        let n2 = sqrt_upper(&other.center_norm_sq(), 24);
        let rad = &n1 * &other.rad + &n2 * &self.rad + &self.rad * &other.rad;
        ComplexBall { re, im, rad }
    }

    /// Exact disk inversion: `1/B(c,r) = B(conj(c)/(|c|^2-r^2), r/(|c|^2-r^2))`.
    pub fn recip(&self) -> Result<Self> {
        let denom = self.center_norm_sq() - &self.rad * &self.rad;
        if !denom.is_positive() {
            return Err(Error::DivisionByZero);
        }
        Ok(ComplexBall {
            re: &self.re / &denom,
            im: -&self.im / &denom,
            rad: &self.rad / &denom,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Enclosure of `|z|^2` over the ball.
    pub fn modulus_sq(&self) -> RealInterval {
        let norm_sq = self.center_norm_sq();
        let (n_lo, n_hi) = sqrt_bounds(&norm_sq, 48);
        let hi_mod = &n_hi + &self.rad;
        let lo_mod = &n_lo - &self.rad;
        let lo_mod = if lo_mod.is_negative() { Rat::zero() } else { lo_mod };
        RealInterval::new(&lo_mod * &lo_mod, &hi_mod * &hi_mod)
    }

    /// Round the center to dyadics of `bits`, absorbing the error into the
    /// radius.
    pub fn round(&self, bits: u32) -> Self {
        let re = dyadic_floor(&self.re, bits);
        let im = dyadic_floor(&self.im, bits);
        let err_re = (&self.re - &re).abs();
        let err_im = (&self.im - &im).abs();
        let slack = sqrt_upper(&(&err_re * &err_re + &err_im * &err_im), 24);
        ComplexBall { re, im, rad: dyadic_ceil(&(&self.rad + &slack), bits) }
    }

    /// True when `other` is contained in the interior of `self`.
    pub fn contains_ball(&self, other: &Self) -> bool {
        let dre = &self.re - &other.re;
        let dim = &self.im - &other.im;
        let dist_sq = &dre * &dre + &dim * &dim;
        let dist_hi = sqrt_upper(&dist_sq, 48);
        dist_hi + &other.rad < self.rad
    }

    /// True when the two balls certainly do not intersect.
    pub fn disjoint(&self, other: &Self) -> bool {
        let dre = &self.re - &other.re;
        let dim = &self.im - &other.im;
        let dist_sq = &dre * &dre + &dim * &dim;
        let (dist_lo, _) = sqrt_bounds(&dist_sq, 48);
        dist_lo > &self.rad + &other.rad
    }
}

/// Sign of a `BigInt` as -1, 0, 1.
pub fn bigint_sign(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn dyadic_rounding_brackets() {
        let r = rat(1, 3);
        let lo = dyadic_floor(&r, 16);
        let hi = dyadic_ceil(&r, 16);
        assert!(lo <= r && r <= hi);
        assert!(&hi - &lo <= rat(1, 65536));
    }

    #[test]
    fn interval_mul_signs() {
        let a = RealInterval::new(rat(-2, 1), rat(3, 1));
        let b = RealInterval::new(rat(-1, 1), rat(4, 1));
        let p = a.mul(&b);
        assert_eq!(*p.lo(), rat(-8, 1));
        assert_eq!(*p.hi(), rat(12, 1));
    }

    #[test]
    fn ln_of_two_matches_known_digits() {
        let (lo, hi) = ln_rat_bounds(&rat(2, 1), 128).unwrap();
        // ln 2 = 0.693147180559945309417232121458...
        let reference = "0.6931471805599453094172321214581765680755";
        let lo_s = rat_to_decimal(&lo, 36);
        let hi_s = rat_to_decimal(&hi, 36);
        assert!(&hi - &lo < Rat::new(num_bigint::BigInt::one(), num_bigint::BigInt::one() << 128));
        assert!(lo_s.starts_with(&reference[..20]), "{lo_s}");
        assert!(hi_s.starts_with(&reference[..20]), "{hi_s}");
    }

    #[test]
    fn ln_monotone_and_exact_at_one() {
        let (lo, hi) = ln_rat_bounds(&rat(1, 1), 64).unwrap();
        assert!(lo <= Rat::zero() && Rat::zero() <= hi);
        let (lo_e, _) = ln_rat_bounds(&rat(5, 2), 64).unwrap();
        let (_, hi_d) = ln_rat_bounds(&rat(5, 3), 64).unwrap();
        assert!(lo_e > hi_d);
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2i64, 1i64), (1, 2), (17, 5), (1000003, 7)] {
            let x = rat(n, d);
            let (lo, hi) = sqrt_bounds(&x, 64);
            assert!(&lo * &lo <= x, "lo^2 > x for {n}/{d}");
            assert!(&hi * &hi >= x, "hi^2 < x for {n}/{d}");
            assert!(&hi - &lo < rat(1, 1 << 40));
        }
    }

    #[test]
    fn ball_inversion_is_exact_disk() {
        let b = ComplexBall::new(rat(2, 1), rat(1, 1), rat(1, 4));
        let inv = b.recip().unwrap();
        // 1/(2+i) = (2-i)/5
        let denom = rat(5, 1) - rat(1, 16);
        assert_eq!(inv.re, rat(2, 1) / denom.clone());
        assert_eq!(inv.im, rat(-1, 1) / denom.clone());
        let product = b.mul(&inv);
        // product ball must contain 1.
        let d_re = product.re - Rat::one();
        let dist_sq = &d_re * &d_re + &product.im * &product.im;
        assert!(dist_sq <= &product.rad * &product.rad);
    }

    #[test]
    fn modulus_sq_encloses() {
        let b = ComplexBall::new(rat(3, 1), rat(4, 1), rat(1, 100));
        let m = b.modulus_sq();
        assert!(m.contains(&rat(25, 1)));
        assert!(m.width() < rat(1, 1));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rat_to_decimal(&rat(1, 3), 5), "0.33333");
        assert_eq!(rat_to_decimal(&rat(-7, 2), 2), "-3.50");
        assert_eq!(rat_to_decimal(&rat(5, 1), 0), "5");
    }
}
