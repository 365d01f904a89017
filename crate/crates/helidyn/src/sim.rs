//! Fixed-step simulation of the open- and closed-loop helicopter.
//!
//! Open loop integrates x' = Ax + Bu(t) under a piecewise-constant input
//! schedule; closed loop applies pure error feedback u = K(x_ref - x_m)
//! against a measured state corrupted by seeded per-step Gaussian noise,
//! with an optional feedforward trim bias. Both use classical RK4 with a
//! zero-order hold on the control across each step.

use crate::error::Error;
use crate::linalg::{least_squares, solve_linear};
use crate::matrix::Matrix;
use crate::model::{idx, output_matrix, StateSpace, N_INPUTS, N_STATES};
use crate::rng::Rng;
use crate::tol::DIVERGENCE_CAP;
use crate::Result;

/// Simulation flavor a scenario describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioKind {
    OpenLoop,
    ClosedLoop,
}

/// One piecewise-constant segment of the open-loop input schedule:
/// `input` applies from time `t` until the next point.
#[derive(Debug, Clone)]
pub struct SchedulePoint {
    pub t: f64,
    pub input: [f64; N_INPUTS],
}

/// Commanded set point for closed-loop flight. All rate, flap and
/// filter states are regulated to zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReferenceCommand {
    pub u_cmd: f64,
    pub v_cmd: f64,
    pub w_cmd: f64,
    pub phi_cmd: f64,
    pub theta_cmd: f64,
}

impl ReferenceCommand {
    /// Expand to the full 13-state reference vector.
    pub fn to_state_vector(self) -> Vec<f64> {
        let mut x = vec![0.0; N_STATES];
        x[idx::U] = self.u_cmd;
        x[idx::V] = self.v_cmd;
        x[idx::W] = self.w_cmd;
        x[idx::PHI] = self.phi_cmd;
        x[idx::THETA] = self.theta_cmd;
        x
    }
}

/// Built-in reference presets mirroring the two flight experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferencePreset {
    /// 10 ft/s forward, 3 deg pitch, 1.5 deg roll.
    ForwardFlight,
    /// 10 ft/s climb; body z points down, so climbing is negative w.
    AxialFlight,
}

pub fn make_reference(preset: ReferencePreset) -> ReferenceCommand {
    match preset {
        ReferencePreset::ForwardFlight => ReferenceCommand {
            u_cmd: 10.0,
            v_cmd: 0.0,
            w_cmd: 0.0,
            phi_cmd: 1.5_f64.to_radians(),
            theta_cmd: 3.0_f64.to_radians(),
        },
        ReferencePreset::AxialFlight => ReferenceCommand {
            u_cmd: 0.0,
            v_cmd: 0.0,
            w_cmd: -10.0,
            phi_cmd: 0.0,
            theta_cmd: 0.0,
        },
    }
}

/// Per-state measurement noise standard deviations.
#[derive(Debug, Clone)]
pub struct NoiseConfig {
    pub enabled: bool,
    pub std: Vec<f64>,
}

impl Default for NoiseConfig {
    fn default() -> Self {
        Self {
            enabled: false,
            std: vec![0.0; N_STATES],
        }
    }
}

/// A complete simulation request.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub kind: ScenarioKind,
    pub duration: f64,
    pub dt: f64,
    pub initial_state: Vec<f64>,
    pub input_schedule: Vec<SchedulePoint>,
    pub reference: ReferenceCommand,
    pub feedforward: bool,
    pub noise: NoiseConfig,
    pub seed: u64,
}

impl Scenario {
    /// A zero-state closed-loop scenario with the default 0.01 s step
    /// and 40 s horizon.
    pub fn closed_loop(reference: ReferenceCommand) -> Self {
        Self {
            kind: ScenarioKind::ClosedLoop,
            duration: 40.0,
            dt: 0.01,
            initial_state: vec![0.0; N_STATES],
            input_schedule: Vec::new(),
            reference,
            feedforward: false,
            noise: NoiseConfig::default(),
            seed: 0,
        }
    }

    /// A zero-state open-loop scenario under the given input schedule.
    pub fn open_loop(schedule: Vec<SchedulePoint>, duration: f64) -> Self {
        Self {
            kind: ScenarioKind::OpenLoop,
            duration,
            dt: 0.01,
            initial_state: vec![0.0; N_STATES],
            input_schedule: schedule,
            reference: ReferenceCommand::default(),
            feedforward: false,
            noise: NoiseConfig::default(),
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.duration > 0.0) || !self.duration.is_finite() {
            return Err(Error::Validation(format!(
                "duration must be positive, got {}",
                self.duration
            )));
        }
        if !(self.dt > 0.0) || self.dt > self.duration {
            return Err(Error::Validation(format!(
                "dt must satisfy 0 < dt <= duration, got dt = {}",
                self.dt
            )));
        }
        if self.initial_state.len() != N_STATES {
            return Err(Error::Validation(format!(
                "initial state must have {N_STATES} entries, got {}",
                self.initial_state.len()
            )));
        }
        if !self.initial_state.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("initial state"));
        }
        let mut prev = 0.0;
        for pt in &self.input_schedule {
            if !pt.t.is_finite() || pt.t < prev || pt.t > self.duration {
                return Err(Error::Validation(format!(
                    "schedule times must be non-decreasing within [0, {}], got {}",
                    self.duration, pt.t
                )));
            }
            if !pt.input.iter().all(|x| x.is_finite()) {
                return Err(Error::NonFinite("input schedule"));
            }
            prev = pt.t;
        }
        if self.noise.std.len() != N_STATES {
            return Err(Error::Validation(format!(
                "noise std must have {N_STATES} entries, got {}",
                self.noise.std.len()
            )));
        }
        if let Some(bad) = self.noise.std.iter().find(|s| !(**s >= 0.0) || !s.is_finite()) {
            return Err(Error::Validation(format!(
                "noise std entries must be nonnegative, got {bad}"
            )));
        }
        Ok(())
    }
}

/// Time-indexed record of one run; `controls[k]` is the input applied
/// at `times[k]`, and `diverged` marks an open-loop run truncated by
/// the state magnitude cap.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    pub controls: Vec<Vec<f64>>,
    pub diverged: bool,
}

impl Trajectory {
    /// CSV with the fixed channel header, one row per sample, full
    /// double precision (17 significant digits), UNIX newlines.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.times.len() * 360 + 80);
        out.push_str("t,u,v,p,q,phi,theta,a,b,w,r,rfb,c,d,th_lat,th_lon,th_ped,th_col\n");
        for k in 0..self.times.len() {
            push_full_precision(&mut out, self.times[k]);
            for x in &self.states[k] {
                out.push(',');
                push_full_precision(&mut out, *x);
            }
            for u in &self.controls[k] {
                out.push(',');
                push_full_precision(&mut out, *u);
            }
            out.push('\n');
        }
        out
    }

    pub fn final_state(&self) -> &[f64] {
        self.states.last().expect("trajectory has at least one sample")
    }
}

fn push_full_precision(out: &mut String, x: f64) {
    use std::fmt::Write;
    write!(out, "{x:.16e}").expect("formatting into a String cannot fail");
}

/// One classical Runge-Kutta step of x' = f(x, u) with the control held
/// constant across the step (zero-order hold).
pub fn rk4_step<F>(derivative: F, x: &[f64], u_ctl: &[f64], dt: f64) -> Vec<f64>
where
    F: Fn(&[f64], &[f64]) -> Vec<f64>,
{
    let n = x.len();
    let k1 = derivative(x, u_ctl);
    let mut stage = vec![0.0; n];
    for i in 0..n {
        stage[i] = x[i] + 0.5 * dt * k1[i];
    }
    let k2 = derivative(&stage, u_ctl);
    for i in 0..n {
        stage[i] = x[i] + 0.5 * dt * k2[i];
    }
    let k3 = derivative(&stage, u_ctl);
    for i in 0..n {
        stage[i] = x[i] + dt * k3[i];
    }
    let k4 = derivative(&stage, u_ctl);
    let mut next = vec![0.0; n];
    for i in 0..n {
        next[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    next
}

fn linear_dynamics<'a>(ss: &'a StateSpace) -> impl Fn(&[f64], &[f64]) -> Vec<f64> + 'a {
    |x: &[f64], u: &[f64]| {
        let mut dx = ss.a.mul_vec(x);
        let bu = ss.b.mul_vec(u);
        for i in 0..dx.len() {
            dx[i] += bu[i];
        }
        dx
    }
}

fn scheduled_input(schedule: &[SchedulePoint], t: f64) -> [f64; N_INPUTS] {
    let mut current = [0.0; N_INPUTS];
    for pt in schedule {
        if pt.t <= t {
            current = pt.input;
        } else {
            break;
        }
    }
    current
}

fn state_blew_up(x: &[f64]) -> bool {
    x.iter().any(|v| !v.is_finite() || v.abs() > DIVERGENCE_CAP)
}

fn step_count(duration: f64, dt: f64) -> usize {
    ((duration / dt).round() as usize).max(1)
}

/// Integrate the open-loop response under the scenario's input schedule.
///
/// Open-loop divergence is a result, not an error: when the state
/// exceeds the magnitude cap the trajectory is truncated at the last
/// finite sample and flagged `diverged`.
pub fn simulate_open_loop(ss: &StateSpace, sc: &Scenario) -> Result<Trajectory> {
    if sc.kind != ScenarioKind::OpenLoop {
        return Err(Error::Validation("scenario kind must be open_loop".into()));
    }
    sc.validate()?;
    let deriv = linear_dynamics(ss);
    let n_steps = step_count(sc.duration, sc.dt);
    let mut traj = Trajectory {
        times: Vec::with_capacity(n_steps + 1),
        states: Vec::with_capacity(n_steps + 1),
        controls: Vec::with_capacity(n_steps + 1),
        diverged: false,
    };
    let mut x = sc.initial_state.clone();
    for k in 0..=n_steps {
        let t = k as f64 * sc.dt;
        let u = scheduled_input(&sc.input_schedule, t);
        traj.times.push(t);
        traj.states.push(x.clone());
        traj.controls.push(u.to_vec());
        if k == n_steps {
            break;
        }
        let next = rk4_step(&deriv, &x, &u, sc.dt);
        if state_blew_up(&next) {
            traj.diverged = true;
            break;
        }
        x = next;
    }
    Ok(traj)
}

/// Solve the steady-state trim system [[A, B], [C, 0]] [x; u] = [0; r]
/// in least squares for the commanded output channels
/// (u, v, w, phi, theta). Used by the feedforward control mode.
pub fn feedforward_trim(
    ss: &StateSpace,
    reference: &ReferenceCommand,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let c = output_matrix(ss, &["u", "v", "w", "phi", "theta"])?;
    let n_out = c.rows();
    let rows = N_STATES + n_out;
    let cols = N_STATES + N_INPUTS;
    let mut m = Matrix::zeros(rows, cols);
    m.set_block(0, 0, &ss.a);
    m.set_block(0, N_STATES, &ss.b);
    m.set_block(N_STATES, 0, &c);
    let mut rhs = vec![0.0; rows];
    rhs[N_STATES + 0] = reference.u_cmd;
    rhs[N_STATES + 1] = reference.v_cmd;
    rhs[N_STATES + 2] = reference.w_cmd;
    rhs[N_STATES + 3] = reference.phi_cmd;
    rhs[N_STATES + 4] = reference.theta_cmd;
    let sol = least_squares(&m, &rhs)?;
    Ok((sol[..N_STATES].to_vec(), sol[N_STATES..].to_vec()))
}

/// Steady state of the error-feedback loop: x_ss = -(A - BK)^-1 B K x_ref.
pub fn closed_loop_steady_state(ss: &StateSpace, k: &Matrix, x_ref: &[f64]) -> Result<Vec<f64>> {
    let closed = ss.a.sub(&ss.b.matmul(k));
    let bk_ref = ss.b.mul_vec(&k.mul_vec(x_ref));
    let rhs = Matrix::column(&bk_ref).neg();
    let x = solve_linear(&closed, &rhs)?;
    Ok(x.col_vec(0))
}

/// Integrate the closed loop under measurement noise.
///
/// Each step measures x_m = x + eta (eta drawn per component from the
/// seeded stream when noise is enabled), applies
/// u = K(x_ref - x_m), or u = u_ss + K(x_ss - x_m) in feedforward mode,
/// and advances one RK4 step. Identical seeds and scenarios reproduce
/// the trajectory bit for bit. Divergence here is an error: the closed
/// loop is expected stable.
pub fn simulate_closed_loop(ss: &StateSpace, k: &Matrix, sc: &Scenario) -> Result<Trajectory> {
    if sc.kind != ScenarioKind::ClosedLoop {
        return Err(Error::Validation("scenario kind must be closed_loop".into()));
    }
    sc.validate()?;
    if k.rows() != ss.b.cols() || k.cols() != ss.a.rows() {
        return Err(Error::Dimension(format!(
            "gain must be {}x{}, got {}x{}",
            ss.b.cols(),
            ss.a.rows(),
            k.rows(),
            k.cols()
        )));
    }

    let (x_target, u_bias) = if sc.feedforward {
        feedforward_trim(ss, &sc.reference)?
    } else {
        (sc.reference.to_state_vector(), vec![0.0; N_INPUTS])
    };

    let deriv = linear_dynamics(ss);
    let mut rng = Rng::new(sc.seed);
    let n_steps = step_count(sc.duration, sc.dt);
    let mut traj = Trajectory {
        times: Vec::with_capacity(n_steps + 1),
        states: Vec::with_capacity(n_steps + 1),
        controls: Vec::with_capacity(n_steps + 1),
        diverged: false,
    };
    let mut x = sc.initial_state.clone();
    for step in 0..=n_steps {
        let t = step as f64 * sc.dt;
        let mut measured = x.clone();
        if sc.noise.enabled {
            for (xm, sigma) in measured.iter_mut().zip(&sc.noise.std) {
                *xm += sigma * rng.normal();
            }
        }
        let mut u_ctl = vec![0.0; N_INPUTS];
        let err: Vec<f64> = x_target
            .iter()
            .zip(&measured)
            .map(|(r, m)| r - m)
            .collect();
        let k_err = k.mul_vec(&err);
        for i in 0..N_INPUTS {
            u_ctl[i] = u_bias[i] + k_err[i];
        }

        traj.times.push(t);
        traj.states.push(x.clone());
        traj.controls.push(u_ctl.clone());
        if step == n_steps {
            break;
        }
        let next = rk4_step(&deriv, &x, &u_ctl, sc.dt);
        if state_blew_up(&next) {
            return Err(Error::Divergence {
                time: (step + 1) as f64 * sc.dt,
            });
        }
        x = next;
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_ss(a: f64, b: f64) -> StateSpace {
        StateSpace {
            a: Matrix::column(&[a]),
            b: Matrix::column(&[b]),
        }
    }

    /// Wraps a low-order system into the 13-state frame so scenarios
    /// validate; extra states are left completely decoupled.
    fn embed(a2: &Matrix, b2: &Matrix) -> StateSpace {
        let mut a = Matrix::zeros(N_STATES, N_STATES);
        let mut b = Matrix::zeros(N_STATES, N_INPUTS);
        a.set_block(0, 0, a2);
        b.set_block(0, 0, b2);
        // Keep the unused states harmlessly stable.
        for i in a2.rows()..N_STATES {
            a[(i, i)] = -1.0;
        }
        StateSpace { a, b }
    }

    #[test]
    fn rk4_zero_field_keeps_state() {
        let x = vec![1.0, -2.0, 3.0];
        let next = rk4_step(|x, _| vec![0.0; x.len()], &x, &[0.0], 0.1);
        assert_eq!(next, x);
    }

    #[test]
    fn rk4_exponential_decay_to_closed_form() {
        // x' = -x from 1.0: x(1) = e^-1.
        let mut x = vec![1.0];
        for _ in 0..100 {
            x = rk4_step(|x, _| vec![-x[0]], &x, &[0.0], 0.01);
        }
        assert!((x[0] - (-1.0_f64).exp()).abs() < 1e-8);
    }

    #[test]
    fn rk4_is_fourth_order() {
        // Halving dt shrinks the t = 1 error about 16-fold.
        let run = |dt: f64| {
            let steps = (1.0 / dt).round() as usize;
            let mut x = vec![1.0];
            for _ in 0..steps {
                x = rk4_step(|x, _| vec![-x[0]], &x, &[0.0], dt);
            }
            (x[0] - (-1.0_f64).exp()).abs()
        };
        let ratio = run(0.02) / run(0.01);
        assert!((12.0..=20.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn open_loop_zero_system_is_constant() {
        let ss = StateSpace {
            a: Matrix::zeros(N_STATES, N_STATES),
            b: Matrix::zeros(N_STATES, N_INPUTS),
        };
        let mut sc = Scenario::open_loop(Vec::new(), 1.0);
        sc.initial_state[0] = 2.5;
        let traj = simulate_open_loop(&ss, &sc).unwrap();
        assert!(!traj.diverged);
        assert_eq!(traj.times.len(), 101);
        assert_eq!(traj.states.len(), traj.controls.len());
        for state in &traj.states {
            assert_eq!(state[0], 2.5);
        }
    }

    #[test]
    fn open_loop_stable_scalar_reaches_static_gain() {
        // x' = -2x + u with step u = 4: steady state 2.
        let ss = embed(&Matrix::column(&[-2.0]), &Matrix::column(&[1.0]));
        let mut sc = Scenario::open_loop(
            vec![SchedulePoint {
                t: 0.0,
                input: [4.0, 0.0, 0.0, 0.0],
            }],
            10.0,
        );
        sc.dt = 0.01;
        let traj = simulate_open_loop(&ss, &sc).unwrap();
        assert!((traj.final_state()[0] - 2.0).abs() < 1e-6);
    }

    #[test]
    fn open_loop_divergence_truncates_and_flags() {
        // x' = +40 x blows past the cap quickly but remains finite at
        // each recorded sample.
        let ss = embed(&Matrix::column(&[40.0]), &Matrix::column(&[0.0]));
        let mut sc = Scenario::open_loop(Vec::new(), 10.0);
        sc.initial_state[0] = 1.0;
        let traj = simulate_open_loop(&ss, &sc).unwrap();
        assert!(traj.diverged);
        assert!(traj.times.len() < 1001);
        assert!(traj.final_state()[0].is_finite());
    }

    #[test]
    fn closed_loop_equilibrium_stays_zero() {
        let ss = embed(&Matrix::column(&[0.0]), &Matrix::column(&[1.0]));
        let k = Matrix::zeros(N_INPUTS, N_STATES);
        let mut sc = Scenario::closed_loop(ReferenceCommand::default());
        sc.duration = 1.0;
        let traj = simulate_closed_loop(&ss, &k, &sc).unwrap();
        for (state, ctl) in traj.states.iter().zip(&traj.controls) {
            assert!(state.iter().all(|x| *x == 0.0));
            assert!(ctl.iter().all(|u| *u == 0.0));
        }
    }

    #[test]
    fn closed_loop_scalar_tracks_reference_exponentially() {
        // Plant x' = u with K = 1 and ref 10: x(t) = 10(1 - e^-t).
        let ss = embed(&Matrix::column(&[0.0]), &Matrix::column(&[1.0]));
        let mut k = Matrix::zeros(N_INPUTS, N_STATES);
        k[(0, 0)] = 1.0;
        let mut sc = Scenario::closed_loop(ReferenceCommand {
            u_cmd: 10.0,
            ..ReferenceCommand::default()
        });
        sc.duration = 5.0;
        let traj = simulate_closed_loop(&ss, &k, &sc).unwrap();
        // The zero-order hold makes the discrete error (1 - dt)^(t/dt),
        // which sits just under the continuous envelope 10 e^-t.
        for (t, state) in traj.times.iter().zip(&traj.states) {
            let err = (state[0] - 10.0).abs();
            assert!(err <= 10.0 * (-t).exp() + 1e-12, "t = {t}: error {err}");
        }
        let err_at = |t: f64| {
            let k = (t / sc.dt).round() as usize;
            (traj.states[k][0] - 10.0).abs()
        };
        let decay = err_at(3.0) / err_at(2.0);
        assert!((0.35..=0.38).contains(&decay), "decay per second {decay}");
    }

    #[test]
    fn closed_loop_divergence_is_fatal() {
        // Destabilizing positive feedback.
        let ss = embed(&Matrix::column(&[5.0]), &Matrix::column(&[1.0]));
        let mut k = Matrix::zeros(N_INPUTS, N_STATES);
        k[(0, 0)] = -50.0; // u = -K x_m with negative gain pushes outward
        let mut sc = Scenario::closed_loop(ReferenceCommand::default());
        sc.initial_state[0] = 1.0;
        assert!(matches!(
            simulate_closed_loop(&ss, &k, &sc),
            Err(Error::Divergence { .. })
        ));
    }

    #[test]
    fn reference_presets_match_flight_conditions() {
        let fwd = make_reference(ReferencePreset::ForwardFlight);
        assert_eq!(fwd.u_cmd, 10.0);
        assert_eq!(fwd.v_cmd, 0.0);
        assert_eq!(fwd.w_cmd, 0.0);
        assert!((fwd.phi_cmd - 0.02618).abs() < 1e-5);
        assert!((fwd.theta_cmd - 0.05236).abs() < 1e-5);

        let ax = make_reference(ReferencePreset::AxialFlight);
        assert_eq!(ax.w_cmd, -10.0);
        assert_eq!(ax.u_cmd, 0.0);
        assert_eq!(ax.phi_cmd, 0.0);

        // Both presets regulate every rate/flap/filter state to zero.
        for r in [fwd, ax] {
            let x = r.to_state_vector();
            for i in [idx::P, idx::Q, idx::A, idx::B, idx::R, idx::RFB, idx::C, idx::D] {
                assert_eq!(x[i], 0.0);
            }
        }
    }

    #[test]
    fn identical_seeds_reproduce_csv_bytes() {
        let ss = embed(&Matrix::column(&[-1.0]), &Matrix::column(&[1.0]));
        let mut k = Matrix::zeros(N_INPUTS, N_STATES);
        k[(0, 0)] = 2.0;
        let mut sc = Scenario::closed_loop(ReferenceCommand {
            u_cmd: 1.0,
            ..ReferenceCommand::default()
        });
        sc.duration = 2.0;
        sc.seed = 7;
        sc.noise.enabled = true;
        sc.noise.std = vec![0.01; N_STATES];
        let a = simulate_closed_loop(&ss, &k, &sc).unwrap().to_csv();
        let b = simulate_closed_loop(&ss, &k, &sc).unwrap().to_csv();
        assert_eq!(a, b);

        let mut other = sc.clone();
        other.seed = 8;
        let c = simulate_closed_loop(&ss, &k, &other).unwrap().to_csv();
        assert_ne!(a, c);
    }

    #[test]
    fn csv_header_and_shape() {
        let ss = embed(&Matrix::column(&[-1.0]), &Matrix::column(&[0.0]));
        let sc = Scenario::open_loop(Vec::new(), 0.05);
        let csv = simulate_open_loop(&ss, &sc).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "t,u,v,p,q,phi,theta,a,b,w,r,rfb,c,d,th_lat,th_lon,th_ped,th_col"
        );
        let first = lines.next().unwrap();
        assert_eq!(first.split(',').count(), 18);
        // 17 significant digits: mantissa printed with 16 fractional digits.
        assert!(first.split(',').next().unwrap().contains("e0"));
    }

    #[test]
    fn schedule_validation() {
        let mut sc = Scenario::open_loop(
            vec![
                SchedulePoint { t: 5.0, input: [0.0; 4] },
                SchedulePoint { t: 1.0, input: [0.0; 4] },
            ],
            10.0,
        );
        let ss = embed(&Matrix::column(&[-1.0]), &Matrix::column(&[0.0]));
        assert!(simulate_open_loop(&ss, &sc).is_err());
        sc.input_schedule.clear();
        sc.dt = -0.1;
        assert!(simulate_open_loop(&ss, &sc).is_err());
    }

    #[test]
    fn noise_ensemble_mean_approaches_noiseless_terminal() {
        // 2-state stable loop; ensemble over 120 seeds.
        let a2 = Matrix::from_rows(&[vec![-1.0, 0.4], vec![0.0, -2.0]]).unwrap();
        let b2 = Matrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let ss = embed(&a2, &b2);
        let mut k = Matrix::zeros(N_INPUTS, N_STATES);
        k[(0, 0)] = 1.0;
        k[(1, 1)] = 1.5;
        let mut sc = Scenario::closed_loop(ReferenceCommand {
            u_cmd: 2.0,
            v_cmd: -1.0,
            ..ReferenceCommand::default()
        });
        sc.duration = 5.0;

        let clean = simulate_closed_loop(&ss, &k, &sc).unwrap();
        let clean_terminal = clean.final_state().to_vec();

        let sigma = 0.05;
        sc.noise.enabled = true;
        sc.noise.std = vec![sigma; N_STATES];
        let n_seeds = 120;
        let mut terminals = Vec::with_capacity(n_seeds);
        for seed in 0..n_seeds {
            sc.seed = seed as u64;
            terminals.push(simulate_closed_loop(&ss, &k, &sc).unwrap().final_state().to_vec());
        }
        for dim in 0..2 {
            let mean = terminals.iter().map(|t| t[dim]).sum::<f64>() / n_seeds as f64;
            let var = terminals
                .iter()
                .map(|t| (t[dim] - mean) * (t[dim] - mean))
                .sum::<f64>()
                / (n_seeds - 1) as f64;
            let se = (var / n_seeds as f64).sqrt();
            assert!(
                (mean - clean_terminal[dim]).abs() <= 3.0 * se.max(1e-12),
                "dim {dim}: mean {mean} vs clean {} (se {se})",
                clean_terminal[dim]
            );
        }
    }
}
