//! Adaptive Gauss–Kronrod quadrature and small root-finding helpers.
//!
//! The 15-point Kronrod rule (7-point Gauss embedded) is the workhorse for
//! every one-dimensional integral in the crate; intervals are bisected on a
//! worst-first heap until the absolute error estimate meets the target.
//! Works for `f64` and `Complex64` integrands through [`QuadValue`].

use num_complex::Complex64;

// 15-point Kronrod abscissae on [0,1] (positive half) and weights,
// 7-point Gauss weights embedded. Values from the GSL QK15 rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_27,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_69,
    0.279_705_391_489_276_67,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// Output values an integrand may produce.
pub trait QuadValue: Copy + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> {
    fn zero() -> Self;
    fn scale(self, k: f64) -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        // max-norm keeps the error estimate meaningful per component
        self.re.abs().max(self.im.abs())
    }
}

/// One GK15 panel: returns (kronrod, |kronrod - gauss| error estimate).
fn gk15<V: QuadValue>(f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> (V, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc.scale(WGK[7]);
    let mut gauss = fc.scale(WG[3]);
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        let sum = f1 + f2;
        kron = kron + sum.scale(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + sum.scale(WG[j / 2]);
        }
    }
    let err = (kron - gauss).norm() * h.abs();
    (kron.scale(h), err)
}

struct Panel<V> {
    a: f64,
    b: f64,
    val: V,
    err: f64,
}

/// Adaptive integration of `f` over `[a, b]` down to absolute tolerance
/// `tol`. Returns the value and the final error estimate.
pub fn integrate<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    tol: f64,
    max_panels: usize,
) -> (V, f64) {
    if a == b {
        return (V::zero(), 0.0);
    }
    let (val, err) = gk15(&mut f, a, b);
    let mut panels = vec![Panel { a, b, val, err }];
    let mut total_err: f64 = err;
    while total_err > tol && panels.len() < max_panels {
        // split the worst panel
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .unwrap();
        let Panel { a, b, err, .. } = panels[idx];
        let width = b - a;
        if width.abs() < 1e-15 * (a.abs() + b.abs() + 1.0) {
            break; // cannot refine further
        }
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(&mut f, a, m);
        let (v2, e2) = gk15(&mut f, m, b);
        total_err += e1 + e2 - err;
        panels[idx] = Panel {
            a,
            b: m,
            val: v1,
            err: e1,
        };
        panels.push(Panel {
            a: m,
            b,
            val: v2,
            err: e2,
        });
    }
    let mut sum = V::zero();
    for p in &panels {
        sum = sum + p.val;
    }
    (sum, total_err)
}

/// Adaptive integration where the caller must see the nodes in ascending
/// order within each panel refinement stage (used by the contour tracer,
/// whose Newton continuation seeds from the previous node). Panels are
/// processed left to right; each is refined by bisection until its local
/// error target is met.
pub fn integrate_ordered<V: QuadValue>(
    f: &mut impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> (V, f64) {
    fn rec<V: QuadValue>(
        f: &mut impl FnMut(f64) -> V,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
    ) -> (V, f64) {
        let (val, err) = {
            // evaluate nodes in ascending order
            let c = 0.5 * (a + b);
            let h = 0.5 * (b - a);
            let mut vals = [V::zero(); 15];
            for (i, v) in vals.iter_mut().enumerate() {
                let x = match i {
                    0..=6 => c - h * XGK[i],
                    7 => c,
                    _ => c + h * XGK[14 - i],
                };
                *v = f(x);
            }
            let mut kron = vals[7].scale(WGK[7]);
            let mut gauss = vals[7].scale(WG[3]);
            for j in 0..7 {
                let sum = vals[j] + vals[14 - j];
                kron = kron + sum.scale(WGK[j]);
                if j % 2 == 1 {
                    gauss = gauss + sum.scale(WG[j / 2]);
                }
            }
            ((kron.scale(h)), (kron - gauss).norm() * h.abs())
        };
        if err <= tol || depth == 0 {
            return (val, err);
        }
        let m = 0.5 * (a + b);
        let (v1, e1) = rec(f, a, m, 0.5 * tol, depth - 1);
        let (v2, e2) = rec(f, m, b, 0.5 * tol, depth - 1);
        (v1 + v2, e1 + e2)
    }
    rec(f, a, b, tol, max_depth)
}

/// 8-point Gauss–Legendre rule on `[a, b]`.
pub fn gauss8<V: QuadValue>(f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> V {
    const X: [f64; 4] = [
        0.183_434_642_495_649_8,
        0.525_532_409_916_329_0,
        0.796_666_477_413_626_7,
        0.960_289_856_497_536_3,
    ];
    const W: [f64; 4] = [
        0.362_683_783_378_362_0,
        0.313_706_645_877_887_3,
        0.222_381_034_453_374_5,
        0.101_228_536_290_376_3,
    ];
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = V::zero();
    for j in 0..4 {
        let x = h * X[j];
        acc = acc + (f(c - x) + f(c + x)).scale(W[j]);
    }
    acc.scale(h)
}

/// Brent's method on a bracketing interval `[a, b]` with `f(a)·f(b) ≤ 0`.
/// Tolerance is absolute in the argument. Handles flat stretches of `f`
/// gracefully (never divides by a vanishing derivative).
pub fn brent(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, xtol: f64, max_iter: u32) -> f64 {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    debug_assert!(fa * fb <= 0.0, "brent: root not bracketed");
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut mflag = true;
    let mut d = c;
    for _ in 0..max_iter {
        if (b - a).abs() < xtol || fb == 0.0 {
            break;
        }
        let mut s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        let lo = (3.0 * a + b) / 4.0;
        let cond = !((lo.min(b) < s && s < lo.max(b))
            && !(mflag && (s - b).abs() >= (b - c).abs() / 2.0)
            && !(!mflag && (s - b).abs() >= (c - d).abs() / 2.0)
            && !(mflag && (b - c).abs() < xtol)
            && !(!mflag && (c - d).abs() < xtol));
        if cond {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        let fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if fa * fs < 0.0 {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
    }
    b
}

/// Neumaier compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    c: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }
    pub fn value(&self) -> f64 {
        self.sum + self.c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_exact_on_polynomials() {
        let (v, e) = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12, 100);
        // antiderivative x^4/4 - x^2 + x: at 3: 20.25-9+3 = 14.25; at -1: .25-1-1=-1.75
        assert!((v - 16.0).abs() < 1e-12, "v={v} e={e}");
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let (v, _) = integrate(|x: f64| (40.0 * x).sin(), 0.0, 1.0, 1e-12, 2000);
        let exact = (1.0 - (40.0_f64).cos()) / 40.0;
        assert!((v - exact).abs() < 1e-11);
    }

    #[test]
    fn complex_integrand() {
        let (v, _) = integrate(
            |x| Complex64::new(0.0, x).exp(),
            0.0,
            std::f64::consts::PI,
            1e-12,
            200,
        );
        assert!((v - Complex64::new(0.0, 2.0)).norm() < 1e-11);
    }

    #[test]
    fn brent_finds_roots_through_flat_regions() {
        // f has an inflection with tiny derivative at the root
        let r = brent(|x| (x - 2.0).powi(3), 0.0, 5.0, 1e-12, 200);
        assert!((r - 2.0).abs() < 1e-4);
        let r2 = brent(|x| x.cos(), 1.0, 2.0, 1e-14, 100);
        assert!((r2 - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn neumaier_sum() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        s.add(1e100);
        s.add(1.0);
        s.add(-1e100);
        assert_eq!(s.value(), 2.0);
    }
}
