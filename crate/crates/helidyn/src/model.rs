//! Parameter ingestion and assembly of the 13-state, 4-input linear
//! helicopter model.
//!
//! States, in fixed order: `u, v, p, q, phi, theta, a, b, w, r, rfb, c, d`
//! (body velocities, angular rates, attitudes, main-rotor flap states,
//! heave, yaw rate, yaw-gyro filter state, stabilizer-bar flap states).
//! Inputs: `th_lat, th_lon, th_ped, th_col` (lateral/longitudinal cyclic,
//! pedal, collective).
//!
//! The dynamics rows assembled by [`build_system`]:
//!
//! ```text
//!  u'   = X_u u - w0 q + v0 r - g theta + X_a a
//!  v'   = Y_v v + w0 r - u0 q + g phi + Y_b b            (+ Y_ped th_ped)
//!  p'   = L_u u + L_v v + L_b b
//!  q'   = M_u u + M_v v + M_a a                          (+ M_col th_col)
//!  phi' = p
//!  theta' = q
//!  a'   = -q + (-a + A_b b + A_c c + A_lat th_lat + A_lon th_lon)/tau_f
//!  b'   = -p + (-b + B_a a + B_d d + B_lat th_lat + B_lon th_lon)/tau_f
//!  w'   = u0 q - v0 p + Z_w w + Z_a a + Z_b b + Z_r r    (+ Z_col th_col)
//!  r'   = N_v v + N_p p + N_w w + N_r r - N_ped rfb      (+ N_ped th_ped + N_col th_col)
//!  rfb' = K_r r + K_rfb rfb
//!  c'   = -q + (-c + C_lon th_lon)/tau_s
//!  d'   = -p + (-d + D_lat th_lat)/tau_s
//! ```
//!
//! All coefficients not named in a row are zero; every derivative
//! defaults to zero, so the minimal model is recovered by omission.
//! The heading angle is deliberately absent (it feeds back into nothing).

use serde::Deserialize;
use serde_json::Value;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::Result;

/// Number of states and inputs of the model.
pub const N_STATES: usize = 13;
pub const N_INPUTS: usize = 4;

pub const STATE_LABELS: [&str; N_STATES] = [
    "u", "v", "p", "q", "phi", "theta", "a", "b", "w", "r", "rfb", "c", "d",
];
pub const INPUT_LABELS: [&str; N_INPUTS] = ["th_lat", "th_lon", "th_ped", "th_col"];

/// State vector indices by role.
pub mod idx {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const P: usize = 2;
    pub const Q: usize = 3;
    pub const PHI: usize = 4;
    pub const THETA: usize = 5;
    pub const A: usize = 6;
    pub const B: usize = 7;
    pub const W: usize = 8;
    pub const R: usize = 9;
    pub const RFB: usize = 10;
    pub const C: usize = 11;
    pub const D: usize = 12;

    pub const TH_LAT: usize = 0;
    pub const TH_LON: usize = 1;
    pub const TH_PED: usize = 2;
    pub const TH_COL: usize = 3;
}

/// Position of `label` in the state ordering.
pub fn state_index(label: &str) -> Option<usize> {
    STATE_LABELS.iter().position(|&l| l == label)
}

/// Stability and control derivatives, trim condition, and time constants
/// of one linearized flight condition.
///
/// Unit-agnostic: the parameter file declares its unit system and the
/// values are carried through unchanged. Angles are radians. The
/// constructors here perform no validation so tests can build degenerate
/// sets (for example `g = 0`); [`load_params`] validates file input.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParameterSet {
    /// Unit system declared by the source file, e.g. "ft-s-rad".
    pub units: String,
    /// Gravity constant (length/s^2).
    pub g: f64,
    /// Trim translational speeds (length/s).
    pub u0: f64,
    pub v0: f64,
    pub w0: f64,
    // Speed derivatives.
    pub x_u: f64,
    pub y_v: f64,
    pub z_w: f64,
    pub l_u: f64,
    pub l_v: f64,
    pub m_u: f64,
    pub m_v: f64,
    pub n_r: f64,
    // Rotor force and flapping-spring derivatives.
    pub x_a: f64,
    pub y_b: f64,
    pub m_a: f64,
    pub l_b: f64,
    // Heave and yaw couplings.
    pub z_col: f64,
    pub z_r: f64,
    pub z_a: f64,
    pub z_b: f64,
    pub n_p: f64,
    pub n_v: f64,
    pub n_w: f64,
    pub n_ped: f64,
    pub n_col: f64,
    pub y_ped: f64,
    pub m_col: f64,
    // Rotor and stabilizer-bar time constants (s).
    pub tau_f: f64,
    pub tau_s: f64,
    // Rotor cross-coupling and bar-to-rotor coupling.
    pub a_b: f64,
    pub b_a: f64,
    pub a_c: f64,
    pub b_d: f64,
    // Swash-plate input derivatives.
    pub a_lat: f64,
    pub a_lon: f64,
    pub b_lat: f64,
    pub b_lon: f64,
    pub c_lon: f64,
    pub d_lat: f64,
    // Yaw-gyro filter gains.
    pub k_r: f64,
    pub k_rfb: f64,
}

/// Names accepted in the file's `derivatives` map, in no particular order.
pub const DERIVATIVE_NAMES: [&str; 33] = [
    "X_u", "Y_v", "Z_w", "L_u", "L_v", "M_u", "M_v", "N_r", "X_a", "Y_b", "M_a", "L_b", "Z_col",
    "Z_r", "Z_a", "Z_b", "N_p", "N_v", "N_w", "N_ped", "N_col", "Y_ped", "M_col", "A_b", "B_a",
    "A_c", "B_d", "A_lat", "A_lon", "B_lat", "B_lon", "C_lon", "D_lat",
];

impl ParameterSet {
    /// Set a derivative by its file name; unknown names are rejected.
    pub fn set_derivative(&mut self, name: &str, value: f64) -> Result<()> {
        let slot = match name {
            "X_u" => &mut self.x_u,
            "Y_v" => &mut self.y_v,
            "Z_w" => &mut self.z_w,
            "L_u" => &mut self.l_u,
            "L_v" => &mut self.l_v,
            "M_u" => &mut self.m_u,
            "M_v" => &mut self.m_v,
            "N_r" => &mut self.n_r,
            "X_a" => &mut self.x_a,
            "Y_b" => &mut self.y_b,
            "M_a" => &mut self.m_a,
            "L_b" => &mut self.l_b,
            "Z_col" => &mut self.z_col,
            "Z_r" => &mut self.z_r,
            "Z_a" => &mut self.z_a,
            "Z_b" => &mut self.z_b,
            "N_p" => &mut self.n_p,
            "N_v" => &mut self.n_v,
            "N_w" => &mut self.n_w,
            "N_ped" => &mut self.n_ped,
            "N_col" => &mut self.n_col,
            "Y_ped" => &mut self.y_ped,
            "M_col" => &mut self.m_col,
            "A_b" => &mut self.a_b,
            "B_a" => &mut self.b_a,
            "A_c" => &mut self.a_c,
            "B_d" => &mut self.b_d,
            "A_lat" => &mut self.a_lat,
            "A_lon" => &mut self.a_lon,
            "B_lat" => &mut self.b_lat,
            "B_lon" => &mut self.b_lon,
            "C_lon" => &mut self.c_lon,
            "D_lat" => &mut self.d_lat,
            _ => {
                return Err(Error::Schema(format!(
                    "unknown derivative name `{name}`"
                )))
            }
        };
        *slot = value;
        Ok(())
    }

    /// Non-fatal issues worth surfacing, currently only the yaw-filter
    /// pole: with the filter driven (K_r != 0) a nonnegative K_rfb means
    /// the filter state itself is not a stable low pass.
    pub fn lint(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        if self.k_r != 0.0 && self.k_rfb >= 0.0 {
            warnings.push(format!(
                "yaw filter is enabled (K_r = {}) but its pole K_rfb = {} is not negative",
                self.k_r, self.k_rfb
            ));
        }
        warnings
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParameterFile {
    #[serde(default)]
    units: Option<String>,
    gravity: f64,
    #[serde(default)]
    trim: TrimSection,
    #[serde(default)]
    derivatives: serde_json::Map<String, Value>,
    time_constants: TimeConstants,
    #[serde(default)]
    yaw_filter: YawFilter,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct TrimSection {
    #[serde(default)]
    u0: f64,
    #[serde(default)]
    v0: f64,
    #[serde(default)]
    w0: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TimeConstants {
    tau_f: f64,
    tau_s: f64,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct YawFilter {
    #[serde(default, rename = "K_r")]
    k_r: f64,
    #[serde(default, rename = "K_rfb")]
    k_rfb: f64,
}

/// Parse and validate a parameter file (JSON).
///
/// Required fields: `gravity` (> 0) and `time_constants.tau_f` /
/// `tau_s` (> 0). Every unlisted derivative defaults to zero; unknown
/// derivative names are rejected so typos cannot silently vanish.
pub fn load_params(document: &str) -> Result<ParameterSet> {
    let file: ParameterFile =
        serde_json::from_str(document).map_err(|e| Error::Schema(e.to_string()))?;

    let mut p = ParameterSet {
        units: file.units.unwrap_or_else(|| "unspecified".to_string()),
        g: file.gravity,
        u0: file.trim.u0,
        v0: file.trim.v0,
        w0: file.trim.w0,
        tau_f: file.time_constants.tau_f,
        tau_s: file.time_constants.tau_s,
        k_r: file.yaw_filter.k_r,
        k_rfb: file.yaw_filter.k_rfb,
        ..ParameterSet::default()
    };

    for (name, value) in &file.derivatives {
        let v = value.as_f64().ok_or_else(|| {
            Error::Schema(format!("derivative `{name}` must be a number"))
        })?;
        p.set_derivative(name, v)?;
    }

    if !(p.g > 0.0) {
        return Err(Error::Validation(format!(
            "gravity must be positive, got {}",
            p.g
        )));
    }
    if !(p.tau_f > 0.0) {
        return Err(Error::Validation(format!(
            "tau_f must be positive, got {}",
            p.tau_f
        )));
    }
    if !(p.tau_s > 0.0) {
        return Err(Error::Validation(format!(
            "tau_s must be positive, got {}",
            p.tau_s
        )));
    }
    let all = [
        p.g, p.u0, p.v0, p.w0, p.x_u, p.y_v, p.z_w, p.l_u, p.l_v, p.m_u, p.m_v, p.n_r, p.x_a,
        p.y_b, p.m_a, p.l_b, p.z_col, p.z_r, p.z_a, p.z_b, p.n_p, p.n_v, p.n_w, p.n_ped, p.n_col,
        p.y_ped, p.m_col, p.tau_f, p.tau_s, p.a_b, p.b_a, p.a_c, p.b_d, p.a_lat, p.a_lon, p.b_lat,
        p.b_lon, p.c_lon, p.d_lat, p.k_r, p.k_rfb,
    ];
    if !all.iter().all(|x| x.is_finite()) {
        return Err(Error::Validation("all parameters must be finite".into()));
    }
    Ok(p)
}

/// The assembled linear model x' = A x + B u.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSpace {
    pub a: Matrix,
    pub b: Matrix,
}

impl StateSpace {
    pub fn state_labels(&self) -> &'static [&'static str; N_STATES] {
        &STATE_LABELS
    }

    pub fn input_labels(&self) -> &'static [&'static str; N_INPUTS] {
        &INPUT_LABELS
    }
}

/// Assemble the state-space matrices row by row from the canonical
/// dynamics equations listed in the module docs.
pub fn build_system(p: &ParameterSet) -> StateSpace {
    use idx::*;
    let mut a = Matrix::zeros(N_STATES, N_STATES);
    let mut b = Matrix::zeros(N_STATES, N_INPUTS);
    let inv_tf = 1.0 / p.tau_f;
    let inv_ts = 1.0 / p.tau_s;

    // u' = X_u u - w0 q + v0 r - g theta + X_a a
    a[(U, U)] = p.x_u;
    a[(U, Q)] = -p.w0;
    a[(U, R)] = p.v0;
    a[(U, THETA)] = -p.g;
    a[(U, A)] = p.x_a;

    // v' = Y_v v + w0 r - u0 q + g phi + Y_b b + Y_ped th_ped
    a[(V, V)] = p.y_v;
    a[(V, R)] = p.w0;
    a[(V, Q)] = -p.u0;
    a[(V, PHI)] = p.g;
    a[(V, B)] = p.y_b;
    b[(V, TH_PED)] = p.y_ped;

    // p' = L_u u + L_v v + L_b b
    a[(P, U)] = p.l_u;
    a[(P, V)] = p.l_v;
    a[(P, B)] = p.l_b;

    // q' = M_u u + M_v v + M_a a + M_col th_col
    a[(Q, U)] = p.m_u;
    a[(Q, V)] = p.m_v;
    a[(Q, A)] = p.m_a;
    b[(Q, TH_COL)] = p.m_col;

    // phi' = p, theta' = q (kinematics, exact)
    a[(PHI, P)] = 1.0;
    a[(THETA, Q)] = 1.0;

    // a' = -q + (-a + A_b b + A_c c + A_lat th_lat + A_lon th_lon)/tau_f
    a[(A, Q)] = -1.0;
    a[(A, A)] = -inv_tf;
    a[(A, B)] = p.a_b * inv_tf;
    a[(A, C)] = p.a_c * inv_tf;
    b[(A, TH_LAT)] = p.a_lat * inv_tf;
    b[(A, TH_LON)] = p.a_lon * inv_tf;

    // b' = -p + (-b + B_a a + B_d d + B_lat th_lat + B_lon th_lon)/tau_f
    a[(B, P)] = -1.0;
    a[(B, B)] = -inv_tf;
    a[(B, A)] = p.b_a * inv_tf;
    a[(B, D)] = p.b_d * inv_tf;
    b[(B, TH_LAT)] = p.b_lat * inv_tf;
    b[(B, TH_LON)] = p.b_lon * inv_tf;

    // w' = u0 q - v0 p + Z_w w + Z_a a + Z_b b + Z_r r + Z_col th_col
    a[(W, Q)] = p.u0;
    a[(W, P)] = -p.v0;
    a[(W, W)] = p.z_w;
    a[(W, A)] = p.z_a;
    a[(W, B)] = p.z_b;
    a[(W, R)] = p.z_r;
    b[(W, TH_COL)] = p.z_col;

    // r' = N_v v + N_p p + N_w w + N_r r - N_ped rfb + N_ped th_ped + N_col th_col
    a[(R, V)] = p.n_v;
    a[(R, P)] = p.n_p;
    a[(R, W)] = p.n_w;
    a[(R, R)] = p.n_r;
    a[(R, RFB)] = -p.n_ped;
    b[(R, TH_PED)] = p.n_ped;
    b[(R, TH_COL)] = p.n_col;

    // rfb' = K_r r + K_rfb rfb (yaw-gyro low-pass filter)
    a[(RFB, R)] = p.k_r;
    a[(RFB, RFB)] = p.k_rfb;

    // c' = -q + (-c + C_lon th_lon)/tau_s
    a[(C, Q)] = -1.0;
    a[(C, C)] = -inv_ts;
    b[(C, TH_LON)] = p.c_lon * inv_ts;

    // d' = -p + (-d + D_lat th_lat)/tau_s
    a[(D, P)] = -1.0;
    a[(D, D)] = -inv_ts;
    b[(D, TH_LAT)] = p.d_lat * inv_ts;

    StateSpace { a, b }
}

/// Selector matrix C with one unit row per selected state, columns in
/// state order; `output_matrix(ss, all labels)` is the identity.
pub fn output_matrix(_ss: &StateSpace, selected: &[&str]) -> Result<Matrix> {
    if selected.is_empty() {
        return Err(Error::Validation("at least one state must be selected".into()));
    }
    let mut seen = [false; N_STATES];
    let mut c = Matrix::zeros(selected.len(), N_STATES);
    for (row, label) in selected.iter().enumerate() {
        let col = state_index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        if seen[col] {
            return Err(Error::Validation(format!("state `{label}` selected twice")));
        }
        seen[col] = true;
        c[(row, col)] = 1.0;
    }
    Ok(c)
}
