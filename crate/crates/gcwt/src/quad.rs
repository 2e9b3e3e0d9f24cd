//! Small quadrature helpers shared by the admissibility and transform code.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Composite Simpson rule on [lo, hi] with `n` intervals (rounded up to even).
pub fn simpson<T: Scalar>(lo: T, hi: T, n: usize, f: impl Fn(T) -> Complex<T>) -> Complex<T> {
    if hi <= lo {
        return Complex::new(T::zero(), T::zero());
    }
    let n = if n % 2 == 0 { n.max(2) } else { n + 1 };
    let h = (hi - lo) / T::c(n as f64);
    let mut acc = f(lo) + f(hi);
    for i in 1..n {
        let x = lo + T::c(i as f64) * h;
        let w = if i % 2 == 1 { T::c(4.0) } else { T::c(2.0) };
        acc = acc + f(x).scale(w);
    }
    acc.scale(h / T::c(3.0))
}

/// Trapezoid rule for a smooth periodic integrand over one full period
/// (spectrally accurate in this setting).
pub fn periodic_trapezoid<T: Scalar>(
    period: T,
    n: usize,
    f: impl Fn(T) -> Complex<T>,
) -> Complex<T> {
    let h = period / T::c(n as f64);
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..n {
        acc = acc + f(T::c(i as f64) * h);
    }
    acc.scale(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_polynomials_exactly() {
        // x^3 on [0, 2] = 4
        let v = simpson(0.0f64, 2.0, 8, |x| Complex::new(x * x * x, 0.0));
        assert!((v.re - 4.0).abs() < 1e-12);
    }

    #[test]
    fn periodic_trapezoid_cosine() {
        // cos^2 over a period = pi
        let v = periodic_trapezoid(std::f64::consts::TAU, 16, |t| {
            Complex::new(t.cos() * t.cos(), 0.0)
        });
        assert!((v.re - std::f64::consts::PI).abs() < 1e-12);
    }
}
