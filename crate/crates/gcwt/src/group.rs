//! Concrete group catalog: group laws, unitary representation actions on
//! sampled signals, modular data and Haar-measure quadrature grids.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{GcwtError, Result};
use crate::scalar::Scalar;
use crate::signal::SampledSignal;

/// The shipped group kinds. Scale-type parameters default to the identity
/// component (positive); see [`GroupModel::full_domain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// ax+b group, parameters (a, t) with a > 0.
    Affine1D,
    /// diag(a1, a2) semidirect R^2, parameters (a1, a2, x1, x2).
    Diag2D,
    /// [[a, b], [0, 1]] semidirect R^2, parameters (a, b, x, y).
    UpperTri2D,
    /// Shear group in dimension 2, parameters (a, s, t1, t2).
    Shear2,
    /// SIM(2) = (R+ x SO(2)) semidirect R^2, parameters (a, theta, t1, t2).
    Similitude2,
    /// Reduced Weyl-Heisenberg group over R, parameters (a, b, phi), phi on the torus.
    WeylHeisenberg1,
    /// G_{5,1}/Z, parameters (phi, x2, x3, x4, x5), phi on the torus.
    G51,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Affine1D => "affine1d",
            GroupKind::Diag2D => "diag2d",
            GroupKind::UpperTri2D => "uppertri2d",
            GroupKind::Shear2 => "shear2",
            GroupKind::Similitude2 => "similitude2",
            GroupKind::WeylHeisenberg1 => "weyl-heisenberg",
            GroupKind::G51 => "g51",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "affine1d" => Ok(GroupKind::Affine1D),
            "diag2d" => Ok(GroupKind::Diag2D),
            "uppertri2d" => Ok(GroupKind::UpperTri2D),
            "shear2" => Ok(GroupKind::Shear2),
            "similitude2" => Ok(GroupKind::Similitude2),
            "weyl-heisenberg" => Ok(GroupKind::WeylHeisenberg1),
            "g51" => Ok(GroupKind::G51),
            other => Err(GcwtError::Config(format!("unknown group kind: {other}"))),
        }
    }
}

/// A group kind plus domain flags; all group operations hang off this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupModel {
    pub kind: GroupKind,
    /// Extend scale coordinates from the identity component (a > 0) to R^*.
    pub full_domain: bool,
}

impl GroupModel {
    pub fn new(kind: GroupKind) -> Self {
        GroupModel { kind, full_domain: false }
    }

    /// Dimension n of the base space the representation acts on.
    pub fn dim_base(&self) -> usize {
        match self.kind {
            GroupKind::Affine1D | GroupKind::WeylHeisenberg1 => 1,
            _ => 2,
        }
    }

    pub fn n_params(&self) -> usize {
        match self.kind {
            GroupKind::Affine1D => 2,
            GroupKind::WeylHeisenberg1 => 3,
            GroupKind::Diag2D | GroupKind::UpperTri2D | GroupKind::Shear2 | GroupKind::Similitude2 => 4,
            GroupKind::G51 => 5,
        }
    }

    /// Indices of the translation block inside the parameter vector.
    pub fn translation_axes(&self) -> &'static [usize] {
        match self.kind {
            GroupKind::Affine1D => &[1],
            GroupKind::WeylHeisenberg1 => &[0],
            GroupKind::Diag2D | GroupKind::UpperTri2D | GroupKind::Shear2 | GroupKind::Similitude2 => &[2, 3],
            GroupKind::G51 => &[2, 4],
        }
    }

    /// Kinds whose non-translation part acts by modulation rather than dilation.
    pub fn is_modulation_kind(&self) -> bool {
        matches!(self.kind, GroupKind::WeylHeisenberg1 | GroupKind::G51)
    }

    fn scale_ok<T: Scalar>(&self, a: T) -> bool {
        if self.full_domain {
            a != T::zero()
        } else {
            a > T::zero()
        }
    }
}

/// An element of a group, in the kind's fixed coordinate layout.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupPoint<T> {
    pub kind: GroupKind,
    pub params: Vec<T>,
}

fn wrap_angle<T: Scalar>(phi: T) -> T {
    let tau = T::PI() + T::PI();
    let mut p = phi % tau;
    if p < T::zero() {
        p += tau;
    }
    p
}

impl<T: Scalar> GroupPoint<T> {
    /// Validating constructor; torus coordinates are wrapped into [0, 2 pi).
    pub fn new(model: &GroupModel, params: Vec<T>) -> Result<Self> {
        if params.len() != model.n_params() {
            return Err(GcwtError::Domain(format!(
                "{} expects {} parameters, got {}",
                model.kind.name(),
                model.n_params(),
                params.len()
            )));
        }
        let mut params = params;
        let scale_err = |which: &str| GcwtError::Domain(format!("{which} outside admissible domain"));
        match model.kind {
            GroupKind::Affine1D => {
                if params[0] <= T::zero() {
                    return Err(scale_err("scale a"));
                }
            }
            GroupKind::Diag2D => {
                if !model.scale_ok(params[0]) || !model.scale_ok(params[1]) {
                    return Err(scale_err("scales (a1, a2)"));
                }
            }
            GroupKind::UpperTri2D | GroupKind::Shear2 => {
                if !model.scale_ok(params[0]) {
                    return Err(scale_err("scale a"));
                }
            }
            GroupKind::Similitude2 => {
                if params[0] <= T::zero() {
                    return Err(scale_err("scale a"));
                }
                params[1] = wrap_angle(params[1]);
            }
            GroupKind::WeylHeisenberg1 => {
                params[2] = wrap_angle(params[2]);
            }
            GroupKind::G51 => {
                params[0] = wrap_angle(params[0]);
            }
        }
        Ok(GroupPoint { kind: model.kind, params })
    }

    pub fn identity(model: &GroupModel) -> Self {
        let params = match model.kind {
            GroupKind::Affine1D => vec![T::one(), T::zero()],
            GroupKind::Diag2D => vec![T::one(), T::one(), T::zero(), T::zero()],
            GroupKind::UpperTri2D => vec![T::one(), T::zero(), T::zero(), T::zero()],
            GroupKind::Shear2 => vec![T::one(), T::zero(), T::zero(), T::zero()],
            GroupKind::Similitude2 => vec![T::one(), T::zero(), T::zero(), T::zero()],
            GroupKind::WeylHeisenberg1 => vec![T::zero(), T::zero(), T::zero()],
            GroupKind::G51 => vec![T::zero(); 5],
        };
        GroupPoint { kind: model.kind, params }
    }

    /// Copy with the translation block zeroed (the B-part of the element).
    pub fn zero_translation(&self, model: &GroupModel) -> Self {
        let mut p = self.clone();
        for &ax in model.translation_axes() {
            p.params[ax] = T::zero();
        }
        p
    }

    pub fn translation(&self, model: &GroupModel) -> Vec<T> {
        model.translation_axes().iter().map(|&ax| self.params[ax]).collect()
    }
}

/// 2x2 matrix as rows; dimension 1 uses a single entry.
type Mat<T> = Vec<Vec<T>>;

fn mat_vec<T: Scalar>(m: &Mat<T>, v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
        .collect()
}

fn mat_transpose_vec<T: Scalar>(m: &Mat<T>, v: &[T]) -> Vec<T> {
    let dim = m.len();
    (0..dim)
        .map(|j| (0..dim).map(|i| m[i][j] * v[i]).sum())
        .collect()
}

fn mat_det<T: Scalar>(m: &Mat<T>) -> T {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => unreachable!("only 1d/2d linear parts"),
    }
}

fn mat_inv<T: Scalar>(m: &Mat<T>) -> Mat<T> {
    match m.len() {
        1 => vec![vec![T::one() / m[0][0]]],
        2 => {
            let d = mat_det(m);
            vec![
                vec![m[1][1] / d, -m[0][1] / d],
                vec![-m[1][0] / d, m[0][0] / d],
            ]
        }
        _ => unreachable!(),
    }
}

impl GroupModel {
    /// Linear part M_g of the action on the base space (identity for
    /// modulation kinds). Composition of translations is t + M_g t'.
    pub fn linear_part<T: Scalar>(&self, g: &GroupPoint<T>) -> Mat<T> {
        let p = &g.params;
        match self.kind {
            GroupKind::Affine1D => vec![vec![p[0]]],
            GroupKind::Diag2D => vec![vec![p[0], T::zero()], vec![T::zero(), p[1]]],
            GroupKind::UpperTri2D => vec![vec![p[0], p[1]], vec![T::zero(), T::one()]],
            GroupKind::Shear2 => {
                // S_s A_a with A_a = diag(a, sgn(a) |a|^{1/2})
                let (a, s) = (p[0], p[1]);
                let root = a.signum() * a.abs().sqrt();
                vec![vec![a, s * root], vec![T::zero(), root]]
            }
            GroupKind::Similitude2 => {
                let (a, th) = (p[0], p[1]);
                let (c, s) = (th.cos(), th.sin());
                vec![vec![a * c, -a * s], vec![a * s, a * c]]
            }
            GroupKind::WeylHeisenberg1 => vec![vec![T::one()]],
            GroupKind::G51 => vec![vec![T::one(), T::zero()], vec![T::zero(), T::one()]],
        }
    }

    /// Group product in the kind's coordinates.
    pub fn compose<T: Scalar>(&self, g: &GroupPoint<T>, h: &GroupPoint<T>) -> Result<GroupPoint<T>> {
        debug_assert_eq!(g.kind, self.kind);
        debug_assert_eq!(h.kind, self.kind);
        let (p, q) = (&g.params, &h.params);
        let params = match self.kind {
            GroupKind::Affine1D => vec![p[0] * q[0], p[1] + p[0] * q[1]],
            GroupKind::Diag2D => vec![
                p[0] * q[0],
                p[1] * q[1],
                p[2] + p[0] * q[2],
                p[3] + p[1] * q[3],
            ],
            GroupKind::UpperTri2D => vec![
                p[0] * q[0],
                p[0] * q[1] + p[1],
                p[2] + p[0] * q[2] + p[1] * q[3],
                p[3] + q[3],
            ],
            GroupKind::Shear2 => {
                let m = self.linear_part(g);
                let t = mat_vec(&m, &[q[2], q[3]]);
                vec![
                    p[0] * q[0],
                    p[1] + p[0].abs().sqrt() * q[1],
                    p[2] + t[0],
                    p[3] + t[1],
                ]
            }
            GroupKind::Similitude2 => {
                let m = self.linear_part(g);
                let t = mat_vec(&m, &[q[2], q[3]]);
                vec![p[0] * q[0], wrap_angle(p[1] + q[1]), p[2] + t[0], p[3] + t[1]]
            }
            GroupKind::WeylHeisenberg1 => {
                let tau = T::PI() + T::PI();
                vec![p[0] + q[0], p[1] + q[1], wrap_angle(p[2] + q[2] + tau * p[1] * q[0])]
            }
            GroupKind::G51 => {
                let tau = T::PI() + T::PI();
                vec![
                    wrap_angle(p[0] + q[0] + tau * (q[1] * p[2] + q[3] * p[4])),
                    p[1] + q[1],
                    p[2] + q[2],
                    p[3] + q[3],
                    p[4] + q[4],
                ]
            }
        };
        GroupPoint::new(self, params)
    }

    pub fn inverse<T: Scalar>(&self, g: &GroupPoint<T>) -> Result<GroupPoint<T>> {
        let p = &g.params;
        let params = match self.kind {
            GroupKind::Affine1D => vec![T::one() / p[0], -p[1] / p[0]],
            GroupKind::Diag2D => vec![
                T::one() / p[0],
                T::one() / p[1],
                -p[2] / p[0],
                -p[3] / p[1],
            ],
            GroupKind::UpperTri2D | GroupKind::Shear2 | GroupKind::Similitude2 => {
                let minv = mat_inv(&self.linear_part(g));
                let t = mat_vec(&minv, &[p[2], p[3]]);
                let head = match self.kind {
                    GroupKind::UpperTri2D => vec![T::one() / p[0], -p[1] / p[0]],
                    GroupKind::Shear2 => {
                        vec![T::one() / p[0], -p[1] / p[0].abs().sqrt()]
                    }
                    GroupKind::Similitude2 => vec![T::one() / p[0], wrap_angle(-p[1])],
                    _ => unreachable!(),
                };
                vec![head[0], head[1], -t[0], -t[1]]
            }
            GroupKind::WeylHeisenberg1 => {
                let tau = T::PI() + T::PI();
                vec![-p[0], -p[1], wrap_angle(-p[2] + tau * p[0] * p[1])]
            }
            GroupKind::G51 => {
                let tau = T::PI() + T::PI();
                vec![
                    wrap_angle(-p[0] + tau * (p[1] * p[2] + p[3] * p[4])),
                    -p[1],
                    -p[2],
                    -p[3],
                    -p[4],
                ]
            }
        };
        GroupPoint::new(self, params)
    }

    /// delta_tau(b): the positive homomorphism with d(a) = delta_tau(b) d(tau_b(a)).
    /// Equals |det tau_b|^{-1}; identically 1 where tau is measure preserving.
    pub fn delta_tau<T: Scalar>(&self, g: &GroupPoint<T>) -> T {
        match self.kind {
            GroupKind::WeylHeisenberg1 | GroupKind::G51 => T::one(),
            _ => T::one() / mat_det(&self.linear_part(g)).abs(),
        }
    }

    /// Density of the left Haar measure against Lebesgue measure in the
    /// kind's coordinates (torus coordinates carry their normalized measure).
    pub fn haar_density<T: Scalar>(&self, g: &GroupPoint<T>) -> T {
        let p = &g.params;
        let two_pi = T::PI() + T::PI();
        match self.kind {
            GroupKind::Affine1D => T::one() / (p[0] * p[0]),
            GroupKind::Diag2D => {
                let d = (p[0] * p[1]).abs();
                T::one() / (d * d)
            }
            GroupKind::UpperTri2D | GroupKind::Shear2 | GroupKind::Similitude2 => {
                T::one() / p[0].abs().powi(3)
            }
            GroupKind::WeylHeisenberg1 | GroupKind::G51 => T::one() / two_pi,
        }
    }
}

/// Action data: pi(g) f (x) = amp * phase * e^{2 pi i <mod, x>} f(M^{-1}(x - shift)).
pub struct Action<T> {
    pub minv: Mat<T>,
    pub shift: Vec<T>,
    pub amp: T,
    pub modulation: Vec<T>,
    pub phase: Complex<T>,
}

impl GroupModel {
    pub fn action<T: Scalar>(&self, g: &GroupPoint<T>) -> Action<T> {
        let p = &g.params;
        let dim = self.dim_base();
        match self.kind {
            GroupKind::WeylHeisenberg1 => {
                let (a, b, phi) = (p[0], p[1], p[2]);
                let two_pi = T::PI() + T::PI();
                Action {
                    minv: vec![vec![T::one()]],
                    shift: vec![a],
                    amp: T::one(),
                    modulation: vec![b],
                    phase: T::cis(phi - two_pi * b * a),
                }
            }
            GroupKind::G51 => Action {
                minv: vec![vec![T::one(), T::zero()], vec![T::zero(), T::one()]],
                shift: vec![p[2], p[4]],
                amp: T::one(),
                modulation: vec![-p[1], -p[3]],
                phase: T::cis(p[0]),
            },
            _ => {
                let m = self.linear_part(g);
                let det = mat_det(&m).abs();
                let shift = g.translation(self);
                Action {
                    minv: mat_inv(&m),
                    shift,
                    amp: T::one() / det.sqrt(),
                    modulation: vec![T::zero(); dim],
                    phase: Complex::new(T::one(), T::zero()),
                }
            }
        }
    }

    /// Apply the unitary representation pi(g) to a sampled signal, resampling
    /// on the signal's own lattice with multilinear interpolation.
    pub fn act<T: Scalar>(&self, g: &GroupPoint<T>, f: &SampledSignal<T>) -> Result<SampledSignal<T>> {
        if f.lattice.dim() != self.dim_base() {
            return Err(GcwtError::LatticeMismatch);
        }
        let action = self.action(g);
        let two_pi = T::PI() + T::PI();
        let out = SampledSignal::from_fn(f.lattice.clone(), |x| {
            let rel: Vec<T> = x.iter().zip(&action.shift).map(|(&xi, &si)| xi - si).collect();
            let y = mat_vec(&action.minv, &rel);
            let base = f.sample(&y);
            if base.re == T::zero() && base.im == T::zero() {
                return base;
            }
            let dot: T = action.modulation.iter().zip(x).map(|(&b, &xi)| b * xi).sum();
            base * action.phase * T::cis(two_pi * dot) * action.amp
        });
        let in_sq = f.norm_sq();
        let out_sq = out.norm_sq();
        if in_sq > T::zero() && out_sq < T::c(0.5) * in_sq {
            let lost = (T::one() - out_sq / in_sq) * T::c(100.0);
            return Err(GcwtError::Resample { lost: lost.to_f64().unwrap_or(100.0) });
        }
        Ok(out)
    }

    /// Phase factor conj(c(g)) where pi(g) psi = c(g) (pi(b) psi)(. - t) for a
    /// group element with B-part b and translation t; the FFT cross-correlation
    /// form of the transform multiplies its output by this factor. For
    /// Weyl-Heisenberg the e^{2 pi i b(x-a)} phase of the representation
    /// already matches the translated B-action, so the factor is 1 there; only
    /// G51 picks up a phase.
    pub fn translation_phase<T: Scalar>(&self, b_part: &GroupPoint<T>, t: &[T]) -> Complex<T> {
        let two_pi = T::PI() + T::PI();
        match self.kind {
            GroupKind::G51 => {
                T::cis(two_pi * (b_part.params[1] * t[0] + b_part.params[3] * t[1]))
            }
            _ => Complex::new(T::one(), T::zero()),
        }
    }
}

// ---------------------------------------------------------------------------
// Haar quadrature grids
// ---------------------------------------------------------------------------

/// Role of one coordinate axis in a product quadrature grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxisRole {
    /// Scale coordinate with Haar factor a^{-power} da, sampled geometrically.
    Scale { power: i32 },
    /// Lebesgue coordinate (shear / modulation parameters).
    Uniform,
    /// Angle on [0, 2 pi) with Lebesgue measure d theta.
    Angle,
    /// Torus phase with normalized measure d phi / 2 pi.
    Phase,
    /// Translation coordinate with Lebesgue measure.
    Translation,
}

#[derive(Debug, Clone)]
pub struct AxisGrid<T> {
    pub role: AxisRole,
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Scalar> AxisGrid<T> {
    fn scale(power: i32, lo: T, hi: T, n: usize) -> Result<Self> {
        if lo <= T::zero() {
            return Err(GcwtError::Domain("scale window requires a_min > 0".into()));
        }
        if hi <= lo || n == 0 {
            return Err(GcwtError::EmptyGrid);
        }
        let (llo, lhi) = (lo.ln(), hi.ln());
        let dl = (lhi - llo) / T::c(n as f64);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let p = T::c(power as f64);
        for i in 0..n {
            let l0 = llo + T::c(i as f64) * dl;
            let l1 = l0 + dl;
            nodes.push(((l0 + l1) / T::c(2.0)).exp());
            let (e0, e1) = (l0.exp(), l1.exp());
            // exact cell mass of a^{-power} da
            let w = if power == 1 {
                l1 - l0
            } else {
                let q = T::one() - p;
                (e1.powf(q) - e0.powf(q)) / q
            };
            weights.push(w);
        }
        Ok(AxisGrid { role: AxisRole::Scale { power }, nodes, weights })
    }

    fn uniform(role: AxisRole, lo: T, hi: T, n: usize) -> Result<Self> {
        if hi <= lo || n == 0 {
            return Err(GcwtError::EmptyGrid);
        }
        let d = (hi - lo) / T::c(n as f64);
        let wt = match role {
            AxisRole::Phase => d / (T::PI() + T::PI()),
            _ => d,
        };
        let mut nodes = Vec::with_capacity(n);
        for i in 0..n {
            nodes.push(lo + (T::c(i as f64) + T::c(0.5)) * d);
        }
        Ok(AxisGrid { role, nodes, weights: vec![wt; n] })
    }

    /// Lattice-aligned translation axis: nodes at lo + i*step covering n steps.
    fn translation_lattice(lo: T, step: T, n: usize) -> Result<Self> {
        if n == 0 || step <= T::zero() {
            return Err(GcwtError::EmptyGrid);
        }
        let nodes = (0..n).map(|i| lo + T::c(i as f64) * step).collect();
        Ok(AxisGrid { role: AxisRole::Translation, nodes, weights: vec![step; n] })
    }

    pub fn total_weight(&self) -> T {
        self.weights.iter().copied().sum()
    }
}

/// Truncated parameter window for a Haar grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowSpec<T> {
    /// Scale range [a_min, a_max]; applied to every scale axis of the kind.
    pub scale: Option<(T, T)>,
    /// Translation box, one (lo, hi) per translation axis.
    pub translation: Vec<(T, T)>,
    /// Range for auxiliary Lebesgue parameters (shear s, modulation b, ...).
    pub aux: Option<(T, T)>,
}

/// Node counts per axis category.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridSpec {
    pub scales: usize,
    pub angles: usize,
    pub aux: usize,
    pub translations: Vec<usize>,
}

/// Product quadrature grid approximating the left Haar measure on a window.
#[derive(Debug, Clone)]
pub struct HaarGrid<T> {
    pub kind: GroupKind,
    pub axes: Vec<AxisGrid<T>>,
}

impl<T: Scalar> HaarGrid<T> {
    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.nodes.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.nodes.len()).collect()
    }

    pub fn total_weight(&self) -> T {
        self.axes.iter().map(|a| a.total_weight()).fold(T::one(), |p, w| p * w)
    }

    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let shape = self.shape();
        let mut idx = vec![0usize; shape.len()];
        for ax in (0..shape.len()).rev() {
            idx[ax] = flat % shape[ax];
            flat /= shape[ax];
        }
        idx
    }

    pub fn node(&self, flat: usize) -> GroupPoint<T> {
        let idx = self.unravel(flat);
        let params = idx.iter().zip(&self.axes).map(|(&i, a)| a.nodes[i]).collect();
        GroupPoint { kind: self.kind, params }
    }

    pub fn weight(&self, flat: usize) -> T {
        let idx = self.unravel(flat);
        idx.iter()
            .zip(&self.axes)
            .map(|(&i, a)| a.weights[i])
            .fold(T::one(), |p, w| p * w)
    }
}

fn need_scale<T: Scalar>(window: &WindowSpec<T>) -> Result<(T, T)> {
    window
        .scale
        .ok_or_else(|| GcwtError::Domain("window.scale required for this kind".into()))
}

fn need_aux<T: Scalar>(window: &WindowSpec<T>) -> Result<(T, T)> {
    window
        .aux
        .ok_or_else(|| GcwtError::Domain("window.aux required for this kind".into()))
}

fn trans_axis<T: Scalar>(window: &WindowSpec<T>, grid: &GridSpec, i: usize) -> Result<AxisGrid<T>> {
    let &(lo, hi) = window
        .translation
        .get(i)
        .ok_or_else(|| GcwtError::Domain("missing translation window".into()))?;
    let n = *grid
        .translations
        .get(i)
        .ok_or_else(|| GcwtError::Domain("missing translation count".into()))?;
    if hi <= lo || n == 0 {
        return Err(GcwtError::EmptyGrid);
    }
    AxisGrid::translation_lattice(lo, (hi - lo) / T::c(n as f64), n)
}

/// Build a quadrature grid for the kind's left Haar measure on the window.
///
/// Scale axes are sampled geometrically (uniform in log a) with exact cell
/// masses; all other axes uniformly.
pub fn haar_grid<T: Scalar>(
    model: &GroupModel,
    window: &WindowSpec<T>,
    grid: &GridSpec,
) -> Result<HaarGrid<T>> {
    let axes = match model.kind {
        GroupKind::Affine1D => {
            let (lo, hi) = need_scale(window)?;
            vec![
                AxisGrid::scale(2, lo, hi, grid.scales)?,
                trans_axis(window, grid, 0)?,
            ]
        }
        GroupKind::Diag2D => {
            let (lo, hi) = need_scale(window)?;
            vec![
                AxisGrid::scale(2, lo, hi, grid.scales)?,
                AxisGrid::scale(2, lo, hi, grid.scales)?,
                trans_axis(window, grid, 0)?,
                trans_axis(window, grid, 1)?,
            ]
        }
        GroupKind::UpperTri2D | GroupKind::Shear2 => {
            let (lo, hi) = need_scale(window)?;
            let (alo, ahi) = need_aux(window)?;
            vec![
                AxisGrid::scale(3, lo, hi, grid.scales)?,
                AxisGrid::uniform(AxisRole::Uniform, alo, ahi, grid.aux)?,
                trans_axis(window, grid, 0)?,
                trans_axis(window, grid, 1)?,
            ]
        }
        GroupKind::Similitude2 => {
            let (lo, hi) = need_scale(window)?;
            let two_pi = T::PI() + T::PI();
            vec![
                AxisGrid::scale(3, lo, hi, grid.scales)?,
                AxisGrid::uniform(AxisRole::Angle, T::zero(), two_pi, grid.angles)?,
                trans_axis(window, grid, 0)?,
                trans_axis(window, grid, 1)?,
            ]
        }
        GroupKind::WeylHeisenberg1 => {
            let (alo, ahi) = need_aux(window)?;
            let two_pi = T::PI() + T::PI();
            vec![
                trans_axis(window, grid, 0)?,
                AxisGrid::uniform(AxisRole::Uniform, alo, ahi, grid.aux)?,
                AxisGrid::uniform(AxisRole::Phase, T::zero(), two_pi, grid.angles.max(1))?,
            ]
        }
        GroupKind::G51 => {
            let (alo, ahi) = need_aux(window)?;
            let two_pi = T::PI() + T::PI();
            vec![
                AxisGrid::uniform(AxisRole::Phase, T::zero(), two_pi, grid.angles.max(1))?,
                AxisGrid::uniform(AxisRole::Uniform, alo, ahi, grid.aux)?,
                trans_axis(window, grid, 0)?,
                AxisGrid::uniform(AxisRole::Uniform, alo, ahi, grid.aux)?,
                trans_axis(window, grid, 1)?,
            ]
        }
    };
    Ok(HaarGrid { kind: model.kind, axes })
}
