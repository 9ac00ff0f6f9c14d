//! The univariate adversary: a sine carrier plus one hidden bump placed in a
//! cell that no sample's first coordinate touches.

use super::AdvError;
use crate::classes::{catalog_profile, Alpha, ClassSpec, Profile, ProfileKind};
use crate::real::{real, Real};

/// Indistinguishable triple (f, f₊, f₋): all three agree wherever the first
/// coordinate avoids the chosen cell, and f±'(0) = 1.
#[derive(Debug, Clone)]
pub struct UnivariateFooling<T> {
    pub base: Profile<T>,
    pub plus: Profile<T>,
    pub minus: Profile<T>,
    /// number of comb cells, 2n
    pub k: usize,
    /// 1-based index of the free cell
    pub cell: usize,
    /// bump center
    pub center: T,
    /// half-width of the bump support
    pub half_width: T,
}

impl<T: Real> UnivariateFooling<T> {
    /// ‖f₊ − f₋‖∞ = 2(1−γ)·c_α·e^{−1}·k^{−α}, attained at the bump center.
    pub fn separation(&self) -> T {
        (self.plus.value(self.center) - self.minus.value(self.center)).abs()
    }
}

/// Place a bump of support width 1/(5n) inside the window
/// I = [π/4 − 1/5, π/4 + 1/5], in the leftmost of the 2n half-open cells that
/// contains none of the n given first coordinates (pigeonhole: n points block
/// at most n of the 2n cells).
pub fn univariate_fooling<T: Real>(
    first_coords: &[T],
    alpha: f64,
    kappa: f64,
) -> Result<UnivariateFooling<T>, AdvError> {
    let n = first_coords.len();
    if n == 0 {
        return Err(AdvError::ParamOutOfRange(
            "need at least one sample coordinate".into(),
        ));
    }
    if alpha <= 1.0 {
        return Err(AdvError::ParamOutOfRange("alpha must exceed 1".into()));
    }
    let k = 2 * n;
    let window_left = crate::classes::BUMP_WINDOW_LEFT;
    let cell_width = crate::classes::BUMP_WINDOW_WIDTH / k as f64;

    let mut blocked = vec![false; k];
    for c in first_coords {
        let offset = c.to_f64().unwrap() - window_left;
        if offset >= 0.0 {
            let cell = (offset / cell_width).floor() as usize;
            if cell < k {
                blocked[cell] = true;
            }
        }
    }
    let free = match blocked.iter().position(|b| !b) {
        Some(j) => j,
        None => return Err(AdvError::NoFreeInterval(k)),
    };

    let spec = ClassSpec::new(Alpha::Finite(real::<T>(alpha)), real(2.0), real(kappa), 1)
        .map_err(AdvError::Class)?;
    let base = catalog_profile(&ProfileKind::Sine, &spec)?;
    let mut theta = vec![0i8; k];
    theta[free] = 1;
    let plus = catalog_profile(&ProfileKind::SineBumps { k, theta: theta.clone() }, &spec)?;
    theta[free] = -1;
    let minus = catalog_profile(&ProfileKind::SineBumps { k, theta }, &spec)?;

    let center = window_left + (2.0 * free as f64 + 1.0) * cell_width / 2.0;
    Ok(UnivariateFooling {
        base,
        plus,
        minus,
        k,
        cell: free + 1,
        center: real(center),
        half_width: real(cell_width / 2.0),
    })
}
