use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-9;
const SPLIT: f64 = 4.0;
const MAX_DEPTH: u32 = 60;

/// Offset logarithmic integral `∫_2^x du / log u`, by adaptive Simpson
/// quadrature with relative tolerance 1e-9. The interval is split at u = 4.
pub fn log_integral(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 || x.is_infinite() {
        return Err(Error::InvalidArgument(format!(
            "log_integral needs finite x >= 2, got {x}"
        )));
    }
    let f = |u: f64| 1.0 / u.ln();
    let mut total = integrate(&f, 2.0, x.min(SPLIT));
    if x > SPLIT {
        total += integrate(&f, SPLIT, x);
    }
    Ok(total)
}

fn integrate(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    // coarse pass to turn the relative tolerance into an absolute one
    let coarse = composite_simpson(f, a, b, 64);
    let eps = TOLERANCE * coarse.abs() * 1e-2;
    let (fa, fm, fb) = (f(a), f((a + b) / 2.0), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive(f, a, b, fa, fm, fb, whole, eps, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = (a + b) / 2.0;
    let (lm, rm) = ((a + m) / 2.0, (m + b) / 2.0);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
}

fn composite_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    /// li(x) - li(2) from the power series
    /// li(x) = γ + ln ln x + Σ (ln x)^n / (n · n!).
    fn series(x: f64) -> f64 {
        const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
        const LI_2: f64 = 1.045_163_780_117_493;
        let l = x.ln();
        let mut term = 1.0;
        let mut sum = 0.0;
        for n in 1..400 {
            term *= l / n as f64;
            let add = term / n as f64;
            sum += add;
            if add < sum * 1e-18 {
                break;
            }
        }
        EULER_GAMMA + l.ln() + sum - LI_2
    }

    #[test]
    fn empty_interval() {
        assert_eq!(log_integral(2.0).unwrap(), 0.0);
    }

    #[test]
    fn rejects_below_two() {
        assert!(log_integral(1.5).is_err());
        assert!(log_integral(f64::NAN).is_err());
    }

    #[test]
    fn worked_values() {
        let ten = log_integral(10.0).unwrap();
        assert!((ten - 5.120_435).abs() < 1e-5, "{ten}");
        let million = log_integral(1e6).unwrap();
        assert!((million - 78_626.5).abs() < 0.1, "{million}");
    }

    #[test]
    fn relative_error_against_series() {
        for x in [
            2.5, 3.0, 4.0, 5.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8,
        ] {
            let got = log_integral(x).unwrap();
            let want = series(x);
            assert!(
                ((got - want) / want).abs() <= 1e-9,
                "x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn increasing_and_near_x_over_log_x() {
        let mut prev = 0.0;
        for k in 0..=50 {
            let x = 10f64.powf(3.0 + 5.0 * k as f64 / 50.0);
            let v = log_integral(x).unwrap();
            assert!(v > prev);
            prev = v;
            let ratio = v / (x / x.ln());
            assert!(ratio > 1.0 && ratio < 1.3, "x={x}: ratio {ratio}");
        }
    }
}
