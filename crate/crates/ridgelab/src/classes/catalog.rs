//! The profile catalog: analytically known profiles admitted to the ridge
//! classes, with their normalization constants.
//!
//! Normalizers that have no closed form (the fooling normalizer θ and the bump
//! seminorm behind c_α) are computed once on a dense grid and cached; the
//! cache is keyed in f64 bits and shared across scalar types.

use super::profile::{trig_max_on_bump_window, Shape};
use super::{seminorm_estimate, Alpha, ClassError, ClassSpec, Profile, DEFAULT_SEMINORM_GRID};
use crate::real::{real, Real};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Catalog profile kinds addressable by string id.
#[derive(Debug, Clone, PartialEq)]
pub enum ProfileKind {
    /// `zero`
    Zero,
    /// `linear`
    Linear,
    /// `sine`
    Sine,
    /// `monomial:j=3` — t^j / j!
    Monomial { j: usize },
    /// `cubic_sine` — sin t + 0.15 t³
    CubicSine,
    /// `bump` — standard bump, normalized when its seminorm exceeds 1
    Bump,
    /// `scaled_bump:k=2,b=0` — bump of support width 2/(5k) centered at b
    ScaledBump { k: usize, b: f64 },
    /// `sine_bumps:k=4,theta=+0-+` — sine plus a damped comb of disjoint bumps
    SineBumps { k: usize, theta: Vec<i8> },
    /// `fooling:anorm=1,eps=0.5` — positive-part power rising after the kink
    Fooling { a_norm: f64, eps: f64 },
}

/// Canonical string id of a catalog kind.
pub fn profile_id(kind: &ProfileKind) -> String {
    match kind {
        ProfileKind::Zero => "zero".into(),
        ProfileKind::Linear => "linear".into(),
        ProfileKind::Sine => "sine".into(),
        ProfileKind::Monomial { j } => format!("monomial:j={j}"),
        ProfileKind::CubicSine => "cubic_sine".into(),
        ProfileKind::Bump => "bump".into(),
        ProfileKind::ScaledBump { k, b } => format!("scaled_bump:k={k},b={b}"),
        ProfileKind::SineBumps { k, theta } => {
            let t: String = theta
                .iter()
                .map(|&v| match v {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect();
            format!("sine_bumps:k={k},theta={t}")
        }
        ProfileKind::Fooling { a_norm, eps } => format!("fooling:anorm={a_norm},eps={eps}"),
    }
}

/// Build a catalog profile admitted to the class described by `spec`.
pub fn catalog_profile<T: Real>(
    kind: &ProfileKind,
    spec: &ClassSpec<T>,
) -> Result<Profile<T>, ClassError> {
    let alpha = spec.alpha;
    let profile = match kind {
        ProfileKind::Zero => Profile {
            shape: Shape::Zero,
            alpha,
            scale: T::one(),
            lip_bound: T::zero(),
            g0_deriv: Some(T::zero()),
            normalizer: T::one(),
        },
        ProfileKind::Linear => Profile {
            shape: Shape::Linear,
            alpha,
            scale: T::one(),
            lip_bound: T::one(),
            g0_deriv: Some(T::one()),
            normalizer: T::one(),
        },
        ProfileKind::Sine => Profile {
            shape: Shape::Sine,
            alpha,
            scale: T::one(),
            lip_bound: T::one(),
            g0_deriv: Some(T::one()),
            normalizer: T::one(),
        },
        ProfileKind::Monomial { j } => {
            if *j > 20 {
                return Err(ClassError::ParamOutOfRange("monomial degree must be ≤ 20".into()));
            }
            Profile {
                shape: Shape::Monomial { j: *j },
                alpha,
                scale: T::one(),
                lip_bound: T::one(),
                g0_deriv: Some(if *j == 1 { T::one() } else { T::zero() }),
                normalizer: real(1.0 / crate::index::factorial(*j)),
            }
        }
        ProfileKind::CubicSine => Profile {
            shape: Shape::CubicSine,
            alpha,
            scale: T::one(),
            lip_bound: T::one(),
            g0_deriv: Some(T::one()),
            normalizer: T::one(),
        },
        ProfileKind::Bump => {
            let a = require_finite(alpha, "bump")?;
            let raw = univariate_bump_seminorm(a.to_f64().unwrap());
            let norm_const = raw.max(1.0);
            Profile {
                shape: Shape::Bump {
                    norm_const: real(norm_const),
                },
                alpha,
                scale: T::one(),
                lip_bound: real((raw / norm_const).min(1.0)),
                g0_deriv: g0_when_smooth(alpha, T::zero()),
                normalizer: real(1.0 / norm_const),
            }
        }
        ProfileKind::ScaledBump { k, b } => {
            let a = require_finite(alpha, "scaled_bump")?;
            if *k == 0 {
                return Err(ClassError::ParamOutOfRange("scaled_bump needs k ≥ 1".into()));
            }
            let c = comb_constant(a.to_f64().unwrap());
            let mut p = Profile {
                shape: Shape::ScaledBump {
                    k: *k,
                    b: real(*b),
                    c_alpha: real(c),
                },
                alpha,
                scale: T::one(),
                lip_bound: T::one(),
                g0_deriv: None,
                normalizer: real(c),
            };
            p.g0_deriv = g0_when_smooth(alpha, p.deriv(1, T::zero()).unwrap_or(T::zero()));
            p
        }
        ProfileKind::SineBumps { k, theta } => {
            let a = require_finite(alpha, "sine_bumps")?;
            if *k == 0 || theta.len() != *k {
                return Err(ClassError::ParamOutOfRange(
                    "sine_bumps needs k ≥ 1 and theta of length k".into(),
                ));
            }
            if theta.iter().any(|&v| v < -1 || v > 1) {
                return Err(ClassError::ParamOutOfRange(
                    "sine_bumps theta entries must be in {-1, 0, 1}".into(),
                ));
            }
            let c = comb_constant(a.to_f64().unwrap());
            Profile {
                shape: Shape::SineBumps {
                    k: *k,
                    theta: theta.clone(),
                    damping: real(1.0 - trig_max_on_bump_window()),
                    c_alpha: real(c),
                },
                alpha,
                scale: T::one(),
                lip_bound: T::one(),
                g0_deriv: Some(T::one()),
                normalizer: real(c),
            }
        }
        ProfileKind::Fooling { a_norm, eps } => {
            if !alpha.is_finite() {
                return Err(ClassError::FoolingInfiniteAlpha);
            }
            if !(*eps > 0.0 && *eps < 1.0) {
                return Err(ClassError::ParamOutOfRange("fooling needs 0 < eps < 1".into()));
            }
            if !(*a_norm > 0.0 && *a_norm <= 1.0) {
                return Err(ClassError::ParamOutOfRange("fooling needs 0 < anorm ≤ 1".into()));
            }
            let a = alpha.value().unwrap().to_f64().unwrap();
            let kink = a_norm * (1.0 - eps * eps / 2.0);
            let theta = fooling_normalizer(a, kink);
            Profile {
                shape: Shape::Fooling {
                    kink: real(kink),
                    theta: real(theta),
                },
                alpha,
                scale: T::one(),
                lip_bound: T::one(),
                g0_deriv: g0_when_smooth(alpha, T::zero()),
                normalizer: real(theta),
            }
        }
    };

    if spec.kappa > T::zero() {
        match profile.g0_deriv {
            Some(g0) if g0.abs() >= spec.kappa => {}
            _ => return Err(ClassError::NotAdmissible(profile_id(kind))),
        }
    }
    Ok(profile)
}

fn require_finite<T: Real>(alpha: Alpha<T>, kind: &str) -> Result<T, ClassError> {
    alpha
        .value()
        .ok_or_else(|| ClassError::NotAdmissible(format!("{kind} with infinite smoothness")))
}

fn g0_when_smooth<T: Real>(alpha: Alpha<T>, value: T) -> Option<T> {
    match alpha {
        Alpha::Infinite => Some(value),
        Alpha::Finite(a) if a > T::one() => Some(value),
        _ => None,
    }
}

/// The class's standard experiment profile set.
pub fn default_profiles<T: Real>(
    spec: &ClassSpec<T>,
) -> Result<Vec<(String, Profile<T>)>, ClassError> {
    let kinds: Vec<ProfileKind> = if spec.kappa > T::zero() {
        vec![ProfileKind::Linear, ProfileKind::Sine, ProfileKind::CubicSine]
    } else if spec.alpha.is_finite() {
        vec![ProfileKind::Linear, ProfileKind::Sine, ProfileKind::Bump]
    } else {
        vec![
            ProfileKind::Linear,
            ProfileKind::Sine,
            ProfileKind::CubicSine,
            ProfileKind::Monomial { j: 3 },
        ]
    };
    kinds
        .into_iter()
        .map(|k| Ok((profile_id(&k), catalog_profile(&k, spec)?)))
        .collect()
}

/// Parse a profile id like `fooling:anorm=1,eps=0.5,alpha=1`.
///
/// An `alpha` key, when present, must agree with the class spec.
pub fn parse_profile_id<T: Real>(id: &str, spec: &ClassSpec<T>) -> Result<ProfileKind, ClassError> {
    let (name, args) = match id.split_once(':') {
        Some((n, a)) => (n, a),
        None => (id, ""),
    };
    let mut kv: HashMap<&str, &str> = HashMap::new();
    for part in args.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| ClassError::ParamOutOfRange(format!("malformed parameter `{part}`")))?;
        kv.insert(k.trim(), v.trim());
    }
    if let Some(a_str) = kv.get("alpha") {
        let a: f64 = a_str
            .parse()
            .map_err(|_| ClassError::ParamOutOfRange("alpha must be numeric".into()))?;
        let spec_a = spec.alpha.value().map(|v| v.to_f64().unwrap());
        if spec_a != Some(a) {
            return Err(ClassError::ParamOutOfRange(format!(
                "profile alpha {a} disagrees with class alpha {spec_a:?}"
            )));
        }
    }
    let get_f64 = |key: &str| -> Result<f64, ClassError> {
        kv.get(key)
            .ok_or_else(|| ClassError::ParamOutOfRange(format!("missing parameter `{key}`")))?
            .parse()
            .map_err(|_| ClassError::ParamOutOfRange(format!("parameter `{key}` must be numeric")))
    };
    let get_usize = |key: &str| -> Result<usize, ClassError> {
        kv.get(key)
            .ok_or_else(|| ClassError::ParamOutOfRange(format!("missing parameter `{key}`")))?
            .parse()
            .map_err(|_| ClassError::ParamOutOfRange(format!("parameter `{key}` must be an integer")))
    };
    match name {
        "zero" => Ok(ProfileKind::Zero),
        "linear" => Ok(ProfileKind::Linear),
        "sine" => Ok(ProfileKind::Sine),
        "cubic_sine" => Ok(ProfileKind::CubicSine),
        "bump" => Ok(ProfileKind::Bump),
        "monomial" => Ok(ProfileKind::Monomial { j: get_usize("j")? }),
        "scaled_bump" => Ok(ProfileKind::ScaledBump {
            k: get_usize("k")?,
            b: get_f64("b")?,
        }),
        "sine_bumps" => {
            let theta_str = kv
                .get("theta")
                .ok_or_else(|| ClassError::ParamOutOfRange("missing parameter `theta`".into()))?;
            let theta: Result<Vec<i8>, ClassError> = theta_str
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    '0' => Ok(0),
                    other => Err(ClassError::ParamOutOfRange(format!(
                        "theta entries must be +, - or 0 (got `{other}`)"
                    ))),
                })
                .collect();
            Ok(ProfileKind::SineBumps {
                k: get_usize("k")?,
                theta: theta?,
            })
        }
        "fooling" => Ok(ProfileKind::Fooling {
            a_norm: get_f64("anorm")?,
            eps: get_f64("eps")?,
        }),
        other => Err(ClassError::UnknownKind(other.into())),
    }
}

// ---------------------------------------------------------------------------
// normalizer caches (f64)
// ---------------------------------------------------------------------------

fn f64_profile(shape: Shape<f64>, alpha: f64) -> Profile<f64> {
    Profile {
        shape,
        alpha: Alpha::Finite(alpha),
        scale: 1.0,
        lip_bound: f64::INFINITY,
        g0_deriv: None,
        normalizer: 1.0,
    }
}

/// Dense-grid estimate of ‖φ‖_{Lip_α[−1,1]} for the standard bump, cached per α.
pub(crate) fn univariate_bump_seminorm(alpha: f64) -> f64 {
    static CACHE: OnceLock<Mutex<HashMap<u64, f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&alpha.to_bits()) {
        return v;
    }
    let raw = f64_profile(Shape::Bump { norm_const: 1.0 }, alpha);
    let est = seminorm_estimate(&raw, DEFAULT_SEMINORM_GRID).expect("bump seminorm");
    cache.lock().unwrap().insert(alpha.to_bits(), est);
    est
}

/// c_α = 1 / (5^α ‖φ‖_{Lip_α}) shared by the scaled bump family.
pub fn comb_constant(alpha: f64) -> f64 {
    1.0 / (5f64.powf(alpha) * univariate_bump_seminorm(alpha))
}

/// θ normalizer of the fooling profile, cached per (α, kink).
pub(crate) fn fooling_normalizer(alpha: f64, kink: f64) -> f64 {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (alpha.to_bits(), kink.to_bits());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let raw = f64_profile(
        Shape::Fooling {
            kink,
            theta: 1.0,
        },
        alpha,
    );
    let est = seminorm_estimate(&raw, DEFAULT_SEMINORM_GRID).expect("fooling seminorm");
    let theta = 1.0 / est;
    cache.lock().unwrap().insert(key, theta);
    theta
}
