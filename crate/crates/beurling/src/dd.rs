//! Minimal double-double arithmetic.
//!
//! Used in exactly one place: reducing the saddle-point phase
//! `t·u_s − u_s^α` modulo 2π when it reaches ~1e13 and beyond, where plain
//! f64 would lose the phase entirely. Only the handful of operations that
//! path needs are implemented (add, mul, div, exp, ln, pow, mod 2π).

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub fn f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    pub fn sub(self, b: Dd) -> Dd {
        self.add(Dd {
            hi: -b.hi,
            lo: -b.lo,
        })
    }

    pub fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (s, e) = quick_two_sum(p, e);
        Dd { hi: s, lo: e }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (s, e) = quick_two_sum(p, e);
        Dd { hi: s, lo: e }
    }

    pub fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self.sub(b.mul_f64(q1));
        let q2 = r.hi / b.hi;
        let r = r.sub(b.mul_f64(q2));
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from(q3))
    }

    /// exp(self); |self.hi| up to ~700.
    pub fn exp(self) -> Dd {
        const LN2: Dd = Dd {
            hi: 0.693_147_180_559_945_3,
            lo: 2.319_046_813_846_299_6e-17,
        };
        let k = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(k));
        // Taylor series of exp(r), |r| <= ~0.35
        let mut term = Dd::from(1.0);
        let mut sum = Dd::from(1.0);
        for n in 1..32 {
            term = term.mul(r).mul_f64(1.0 / n as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-36 * sum.hi.abs() {
                break;
            }
        }
        // scale by 2^k
        let scale = (k as i32).clamp(-1000, 1000);
        let p = 2f64.powi(scale);
        Dd {
            hi: sum.hi * p,
            lo: sum.lo * p,
        }
    }

    /// Natural log of a positive value: one Newton step from the f64 seed.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = Dd::from(self.hi.ln());
        // y1 = y0 + x*exp(-y0) - 1
        let e = Dd {
            hi: -y0.hi,
            lo: -y0.lo,
        }
        .exp();
        let corr = self.mul(e).sub(Dd::from(1.0));
        y0.add(corr)
    }

    /// self^p for self > 0.
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }

    /// Reduce modulo 2π into (-π, π]. Exact multi-leg subtraction keeps the
    /// result accurate even when `self` is ~1e28.
    pub fn rem_two_pi(self) -> f64 {
        const TWO_PI_LEGS: [f64; 4] = [
            6.283_185_307_179_586,
            2.449_293_598_294_706_4e-16,
            -5.989_539_619_436_679e-33,
            2.224_908_441_726_730_6e-49,
        ];
        const TWO_PI: Dd = Dd {
            hi: TWO_PI_LEGS[0],
            lo: TWO_PI_LEGS[1],
        };
        let q = self.div(TWO_PI);
        // split the (possibly > 2^53) quotient integer into two exact f64s
        let n_hi = q.hi.round();
        let n_lo = (q.hi - n_hi + q.lo).round();
        let mut acc = self;
        for leg in TWO_PI_LEGS {
            // each product is exact via two_prod; subtract in dd
            let (p1, e1) = two_prod(n_hi, leg);
            acc = acc.sub(Dd::new(p1, e1));
            let (p2, e2) = two_prod(n_lo, leg);
            acc = acc.sub(Dd::new(p2, e2));
        }
        let mut r = acc.f64();
        while r > std::f64::consts::PI {
            r -= 2.0 * std::f64::consts::PI;
        }
        while r <= -std::f64::consts::PI {
            r += 2.0 * std::f64::consts::PI;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_roundtrip() {
        let a = Dd::from(1.0).div(Dd::from(3.0));
        let b = a.mul_f64(3.0);
        assert!((b.f64() - 1.0).abs() < 1e-31);
        assert!(b.sub(Dd::from(1.0)).hi.abs() < 1e-31);
    }

    #[test]
    fn exp_ln_inverse() {
        for &x in &[0.1, 1.0, 2.5, 10.0, 123.456, 1e-3] {
            let l = Dd::from(x).ln();
            let e = l.exp();
            assert!(
                (e.f64() - x).abs() < 1e-28 * x,
                "x={x} got={} lo={}",
                e.f64(),
                e.lo
            );
        }
    }

    #[test]
    fn pow_matches_f64_scale() {
        let v = Dd::from(800.0).powf(Dd::from(4.0));
        assert!((v.f64() - 800f64.powi(4)).abs() < 1e-15 * v.f64());
    }

    #[test]
    fn phase_reduction_large() {
        // known: 1e13 mod 2pi; compare against f64 computation done in pieces
        // 1e13 = n*2pi + r with n = 1591549430918 (floor(1e13/2pi) ≈ 1.5915e12)
        let r = Dd::from(1e13).rem_two_pi();
        // mpmath: fmod(1e13, 2pi) = 3.071767... -> centered: 3.0717...
        assert!((r - 3.071_767_423_687_65).abs() < 1e-12, "r={r}");
        // small values pass through
        assert!((Dd::from(1.5).rem_two_pi() - 1.5).abs() < 1e-15);
        assert!((Dd::from(-2.0).rem_two_pi() + 2.0).abs() < 1e-15);
    }
}
