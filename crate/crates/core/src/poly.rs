//! Integer polynomials, Sturm sequences, and certified real root isolation.

use crate::interval::{ComplexBall, RealInterval};
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate polynomial with integer coefficients, stored `c0..=cd`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds from `c0..=cd`, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Palindromic coefficient test (self-reciprocal polynomial).
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Divides by the gcd of the coefficients and normalises the leading
    /// coefficient to be positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        acc
    }

    pub fn eval_interval(&self, x: &RealInterval) -> RealInterval {
        let mut acc = RealInterval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_rat(&Rat::from(c.clone()));
        }
        acc
    }

    pub fn eval_ball(&self, z: &ComplexBall) -> ComplexBall {
        let mut acc = ComplexBall::exact(Rat::zero(), Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(&ComplexBall::exact(Rat::from(c.clone()), Rat::zero()));
        }
        acc
    }

    /// Exact evaluation at a rational complex point.
    pub fn eval_complex_rat(&self, re: &Rat, im: &Rat) -> (Rat, Rat) {
        let mut acc_re = Rat::zero();
        let mut acc_im = Rat::zero();
        for c in self.coeffs.iter().rev() {
            let new_re = &acc_re * re - &acc_im * im + Rat::from(c.clone());
            let new_im = &acc_re * im + &acc_im * re;
            acc_re = new_re;
            acc_im = new_im;
        }
        (acc_re, acc_im)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return IntPoly::new(vec![BigInt::zero()]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn to_rat_coeffs(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|c| Rat::from(c.clone())).collect()
    }

    /// Square-free test via `deg gcd(f, f') == 0`.
    pub fn is_squarefree(&self) -> bool {
        if self.degree() == 0 {
            return true;
        }
        let g = rat_gcd(&self.to_rat_coeffs(), &self.derivative().to_rat_coeffs());
        g.len() == 1
    }

    /// The square-free part `f / gcd(f, f')`, primitive with positive lead.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = rat_gcd(&self.to_rat_coeffs(), &self.derivative().to_rat_coeffs());
        if g.len() == 1 {
            return self.primitive();
        }
        let (q, r) = rat_divmod(&self.to_rat_coeffs(), &g);
        debug_assert!(r.iter().all(Zero::is_zero));
        rat_poly_to_int(&q)
    }

    /// Cauchy bound: all complex roots have modulus below `1 + max|ci|/|cd|`.
    pub fn root_bound(&self) -> Rat {
        let lead = Rat::from(self.leading().clone()).abs();
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = Rat::from(c.clone()).abs();
            if a > m {
                m = a;
            }
        }
        Rat::one() + m / lead
    }

    /// Sturm chain of the square-free part.
    pub fn sturm_chain(&self) -> Vec<Vec<Rat>> {
        let mut chain: Vec<Vec<Rat>> = Vec::new();
        let f = self.to_rat_coeffs();
        let df = self.derivative().to_rat_coeffs();
        chain.push(f);
        if rat_deg(&df) == 0 && df[0].is_zero() {
            return chain;
        }
        chain.push(df);
        loop {
            let n = chain.len();
            let (_, r) = rat_divmod(&chain[n - 2], &chain[n - 1]);
            let r: Vec<Rat> = r.into_iter().map(|c| -c).collect();
            let r = rat_trim(r);
            if r.len() == 1 && r[0].is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    /// Number of distinct real roots in `(a, b]`, via Sturm's theorem.
    /// Requires a square-free polynomial.
    pub fn count_roots_in(&self, chain: &[Vec<Rat>], a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        let va = sturm_variations(chain, a);
        let vb = sturm_variations(chain, b);
        va - vb
    }

    /// Isolating intervals for every real root, sorted ascending. Each
    /// interval `(lo, hi)` contains exactly one root, with nonzero values at
    /// both endpoints (or `lo == hi` for an exact rational root).
    pub fn isolate_real_roots(&self) -> Result<Vec<RealInterval>> {
        if !self.is_squarefree() {
            return Err(Error::InvalidPolynomial("polynomial is not square-free".into()));
        }
        if self.degree() == 0 {
            return Ok(vec![]);
        }
        let chain = self.sturm_chain();
        let bound = self.root_bound();
        let mut stack = vec![(-&bound - Rat::one(), &bound + Rat::one())];
        let mut found: Vec<RealInterval> = Vec::new();
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count_roots_in(&chain, &lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                found.push(self.tidy_isolating(lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / crate::rat_int(2);
            if self.eval_rat(&mid).is_zero() {
                found.push(RealInterval::point(mid.clone()));
                // Exclude the exact root from both halves.
                let chainref = &chain;
                let eps = smallest_gap(&lo, &hi);
                let left_hi = &mid - &eps;
                let right_lo = &mid + &eps;
                if self.count_roots_in(chainref, &lo, &left_hi) > 0 {
                    stack.push((lo.clone(), left_hi));
                }
                if self.count_roots_in(chainref, &right_lo, &hi) > 0 {
                    stack.push((right_lo, hi.clone()));
                }
            } else {
                stack.push((lo.clone(), mid.clone()));
                stack.push((mid, hi));
            }
        }
        found.sort_by(|x, y| x.lo().cmp(y.lo()));
        Ok(found)
    }

    // Shrink an isolating interval so neither endpoint is a root, and record
    // exact rational roots as point intervals.
    fn tidy_isolating(&self, lo: Rat, hi: Rat) -> RealInterval {
        // Sturm counts roots in (lo, hi]; hi may be the root itself.
        if self.eval_rat(&hi).is_zero() {
            return RealInterval::point(hi);
        }
        RealInterval::new(lo, hi)
    }

    /// Refines an isolating interval (sign change or point) to width below
    /// `2^-prec`, by bisection with exact sign evaluation, accelerated by
    /// interval Newton steps once the derivative is bounded away from zero.
    pub fn refine_root(&self, iv: &RealInterval, prec: u32) -> RealInterval {
        let target = Rat::new(BigInt::one(), BigInt::one() << prec);
        if iv.is_point() {
            return iv.clone();
        }
        let mut lo = iv.lo().clone();
        let mut hi = iv.hi().clone();
        let mut f_lo = self.eval_rat(&lo);
        if f_lo.is_zero() {
            return RealInterval::point(lo);
        }
        let f_hi = self.eval_rat(&hi);
        if f_hi.is_zero() {
            return RealInterval::point(hi);
        }
        debug_assert!(
            f_lo.is_negative() != f_hi.is_negative(),
            "isolating interval must change sign"
        );
        let deriv = self.derivative();
        let work = prec + 16;
        while &hi - &lo > target {
            // Try an interval Newton contraction first.
            let cur = RealInterval::new(lo.clone(), hi.clone());
            let dmg = deriv.eval_interval(&cur);
            let mut stepped = false;
            if !dmg.contains_zero() {
                let m = cur.midpoint();
                let fm = self.eval_rat(&m);
                if fm.is_zero() {
                    return RealInterval::point(m);
                }
                let q = RealInterval::point(fm).div(&dmg).expect("derivative excludes zero");
                let newton = RealInterval::point(m).sub(&q);
                if let Some(next) = newton.intersect(&cur) {
                    if next.width() < cur.width() * crate::rat(3, 4) {
                        let next = next.round_out(work);
                        let next = next.intersect(&cur).unwrap_or(next);
                        // Keep the sign-change bracket by re-testing endpoints.
                        let mut nl = next.lo().clone();
                        let mut nh = next.hi().clone();
                        let f_nl = self.eval_rat(&nl);
                        let f_nh = self.eval_rat(&nh);
                        if f_nl.is_zero() {
                            return RealInterval::point(nl);
                        }
                        if f_nh.is_zero() {
                            return RealInterval::point(nh);
                        }
                        if f_nl.is_negative() != f_nh.is_negative() {
                            lo = nl;
                            hi = nh;
                            f_lo = f_nl;
                            stepped = true;
                        } else {
                            // Root escaped the rounded interval; extend back
                            // toward the side with the old bracket endpoint.
                            if f_lo.is_negative() != f_nl.is_negative() {
                                nh = nl;
                                nl = lo.clone();
                                let _ = nh;
                                hi = next.lo().clone();
                                let _ = nl;
                            } else {
                                lo = next.hi().clone();
                                f_lo = self.eval_rat(&lo);
                            }
                            stepped = true;
                        }
                    }
                }
            }
            if !stepped {
                let mid = (&lo + &hi) / crate::rat_int(2);
                let f_mid = self.eval_rat(&mid);
                if f_mid.is_zero() {
                    return RealInterval::point(mid);
                }
                if f_mid.is_negative() == f_lo.is_negative() {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
        }
        RealInterval::new(lo, hi)
    }

    /// Floating-point approximations of all complex roots (Durand–Kerner).
    /// Only used to seed certified refinement; never trusted directly.
    pub fn approx_roots_f64(&self) -> Vec<Complex64> {
        let d = self.degree();
        if d == 0 {
            return vec![];
        }
        let lead = self.leading();
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(|c| {
                let q = Rat::new(c.clone(), lead.clone());
                Complex64::new(q.to_f64().unwrap_or(0.0), 0.0)
            })
            .collect();
        let eval = |z: Complex64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in coeffs.iter().rev() {
                acc = acc * z + c;
            }
            acc
        };
        let bound = self.root_bound().to_f64().unwrap_or(4.0);
        let seed = Complex64::new(0.4, 0.9) * bound.min(1e6);
        let mut roots: Vec<Complex64> = (0..d).map(|i| seed.powu(i as u32 + 1)).collect();
        for _ in 0..512 {
            let mut moved: f64 = 0.0;
            for i in 0..d {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..d {
                    if i != j {
                        denom *= roots[i] - roots[j];
                    }
                }
                if denom.norm_sqr() == 0.0 {
                    continue;
                }
                let delta = eval(roots[i]) / denom;
                roots[i] -= delta;
                moved += delta.norm_sqr();
            }
            if moved < 1e-28 {
                break;
            }
        }
        roots
    }
}

fn smallest_gap(lo: &Rat, hi: &Rat) -> Rat {
    (hi - lo) / crate::rat_int(1 << 20)
}

// ---- rational polynomial helpers (internal) ----

fn rat_deg(p: &[Rat]) -> usize {
    p.len() - 1
}

fn rat_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rat::zero());
    }
    p
}

pub(crate) fn rat_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = rat_trim(den.to_vec());
    assert!(!(den.len() == 1 && den[0].is_zero()), "division by zero polynomial");
    let mut rem = rat_trim(num.to_vec());
    let dd = rat_deg(&den);
    if rat_deg(&rem) < dd || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rat_deg(&rem) - dd + 1];
    let lead = den.last().unwrap().clone();
    while rat_deg(&rem) >= dd && !(rem.len() == 1 && rem[0].is_zero()) {
        let shift = rat_deg(&rem) - dd;
        let factor = rem.last().unwrap() / &lead;
        quot[shift] = factor.clone();
        for i in 0..=dd {
            let idx = shift + i;
            let sub = &den[i] * &factor;
            rem[idx] = &rem[idx] - sub;
        }
        rem = rat_trim(rem);
        if rat_deg(&rem) < dd {
            break;
        }
    }
    (rat_trim(quot), rem)
}

pub(crate) fn rat_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = rat_trim(a.to_vec());
    let mut b = rat_trim(b.to_vec());
    while !(b.len() == 1 && b[0].is_zero()) {
        let (_, r) = rat_divmod(&a, &b);
        a = b;
        b = rat_trim(r);
    }
    // Normalise monic.
    let lead = a.last().unwrap().clone();
    if !lead.is_zero() {
        for c in &mut a {
            *c = &*c / &lead;
        }
    }
    a
}

pub(crate) fn rat_poly_to_int(p: &[Rat]) -> IntPoly {
    let mut denom = BigInt::one();
    for c in p {
        denom = num_integer::lcm(denom, c.denom().clone());
    }
    IntPoly::new(p.iter().map(|c| c.numer() * &denom / c.denom()).collect()).primitive()
}

fn sign_at(p: &[Rat], x: &Rat) -> i32 {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    if acc.is_zero() {
        0
    } else if acc.is_negative() {
        -1
    } else {
        1
    }
}

fn sturm_variations(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn squarefree_detection() {
        assert!(IntPoly::from_i64(&[-1, -1, 1]).is_squarefree()); // x^2-x-1
        assert!(!IntPoly::from_i64(&[1, -2, 1]).is_squarefree()); // (x-1)^2
        assert_eq!(
            IntPoly::from_i64(&[1, -2, 1]).squarefree_part(),
            IntPoly::from_i64(&[-1, 1])
        );
    }

    #[test]
    fn isolates_golden_ratio_roots() {
        let p = IntPoly::from_i64(&[-1, -1, 1]);
        let roots = p.isolate_real_roots().unwrap();
        assert_eq!(roots.len(), 2);
        let phi = p.refine_root(&roots[1], 100);
        assert!(phi.contains(&rat(161803, 100000)) || phi.lo() > &rat(161803, 100000));
        // phi = 1.6180339887...; check the enclosure sits in the right spot.
        assert!(phi.lo() > &rat(16180, 10001));
        assert!(phi.hi() < &rat(16181, 10000));
        assert!(phi.width() < Rat::new(BigInt::one(), BigInt::one() << 100));
    }

    #[test]
    fn counts_roots_with_sturm() {
        let p = IntPoly::from_i64(&[2, -3, 1]); // (x-1)(x-2)
        let roots = p.isolate_real_roots().unwrap();
        assert_eq!(roots.len(), 2);
        // Exact rational roots are collapsed to points.
        assert!(roots.iter().any(|r| r.is_point() && *r.lo() == rat(1, 1))
            || roots.iter().all(|r| r.contains(&rat(1, 1)) || r.contains(&rat(2, 1))));
    }

    #[test]
    fn no_real_roots_for_x2_plus_1() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        assert!(p.isolate_real_roots().unwrap().is_empty());
        let approx = p.approx_roots_f64();
        assert_eq!(approx.len(), 2);
        assert!(approx.iter().all(|z| (z.norm() - 1.0).abs() < 1e-8));
    }

    #[test]
    fn reciprocal_test() {
        assert!(IntPoly::from_i64(&[1, -1, -1, -1, 1]).is_reciprocal());
        assert!(!IntPoly::from_i64(&[-1, -1, 1]).is_reciprocal());
    }

    #[test]
    fn refine_point_root() {
        let p = IntPoly::from_i64(&[-2, 1]); // x - 2
        let roots = p.isolate_real_roots().unwrap();
        assert_eq!(roots.len(), 1);
        let r = p.refine_root(&roots[0], 64);
        assert!(r.is_point());
        assert_eq!(*r.lo(), rat(2, 1));
    }
}
