//! Bracketed scalar root finding (Brent's method).

/// Why a bracketed solve failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootFailure {
    /// `f(lo)` and `f(hi)` have the same strict sign.
    NoSignChange,
    /// The bracket collapsed without reaching the residual tolerance.
    Stalled { x: f64, residual: f64 },
    /// `f` returned a non-finite value.
    NonFinite { x: f64 },
}

/// Finds `x ∈ [lo, hi]` with `|f(x)| ≤ residual_tol`.
///
/// Iterates until the bracket is at floating-point resolution or the residual
/// target is met with a bracket narrower than `x_tol`. Errors from `f` are
/// passed through unchanged.
pub fn brent<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    residual_tol: f64,
    x_tol: f64,
) -> Result<Result<f64, RootFailure>, E> {
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if !fa.is_finite() {
        return Ok(Err(RootFailure::NonFinite { x: a }));
    }
    if !fb.is_finite() {
        return Ok(Err(RootFailure::NonFinite { x: b }));
    }
    if fa == 0.0 {
        return Ok(Ok(a));
    }
    if fb == 0.0 {
        return Ok(Ok(b));
    }
    if fa.signum() == fb.signum() {
        return Ok(Err(RootFailure::NoSignChange));
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * x_tol;
        let m = 0.5 * (c - b);
        if fb == 0.0 || (m.abs() <= tol && fb.abs() <= residual_tol) {
            return Ok(Ok(b));
        }
        if m.abs() <= 2.0 * f64::EPSILON * b.abs() + f64::MIN_POSITIVE {
            // bracket at resolution
            return Ok(if fb.abs() <= residual_tol {
                Ok(b)
            } else {
                Err(RootFailure::Stalled { x: b, residual: fb })
            });
        }

        if e.abs() >= tol && fa.abs() > fb.abs() {
            // inverse quadratic or secant step
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
        if !fb.is_finite() {
            return Ok(Err(RootFailure::NonFinite { x: b }));
        }
    }
    Ok(Err(RootFailure::Stalled { x: b, residual: fb }))
}
