use std::path::PathBuf;

use clap::Subcommand;
use localsurf::algebra::{format_rational, parse_rational, Chart, ParamPoly, Rational};
use localsurf::bundle::{
    charge_report, extension_to_transition, moduli_dimension, raw_parameter_count, restrict_to_zero_section,
    split_certificate_with, splitting_type_p1, splitting_window, ExtensionClass,
};
use localsurf::cohomology::{
    h0_basis, h1, h1_stabilized, normal_form, triviality_certificate, GrowthPolicy, VectorCocycle, Window,
};
use localsurf::deformation::{
    deform_by_cocycle, ext_basis_tangent, family_and_ks, hirzebruch_embed_check, integrability_analysis,
    jacobian_multiple, normalize_deformation, tangent_h1, HirzebruchCoords, TangentExtensionClass, Verdict,
};
use localsurf::{LineBundleSpec, PolyMatrix};
use serde_json::{json, Value};

use crate::input::{self, SurfaceArgs};
use crate::output::{self, strings};
use crate::{golden, CliError};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// H^1 of O(-n), or of a bundle given by its transition matrix.
    H1 {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Twist: the bundle is O(-n).
        #[arg(long, allow_hyphen_values = true, required_unless_present = "transition")]
        n: Option<i64>,
        /// Transition matrix, rows separated by `;`, e.g. "z^2, 0; 0, z^-2".
        #[arg(long, conflicts_with = "n", allow_hyphen_values = true)]
        transition: Option<String>,
        /// Fixed window minZ,maxZ,maxU; by default the window grows until the dimension settles.
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Global sections of O(n) inside a window.
    H0 {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Window representative of a class in H^1(O(-n)).
    NormalForm {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Explicit f_U, f_V with sigma = f_U + z^-n f_V.
    CertifyTrivial {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// H^1 of the tangent bundle of Z_k.
    Tangent {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        k: i64,
    },
    /// Generators of Ext^1(O(2), O(-k)) and the matching H^1 classes.
    ExtBasis {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        k: i64,
    },
    /// Integrability of a tangent-bundle extension class.
    Integrate {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        k: i64,
        /// Class s_1 z^(k-1) u + sum s_0l z^l with -1 <= l <= k-1.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// The semiuniversal family and its Kodaira-Spencer map.
    Family {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        k: i64,
        /// Parameter point t_1,...,t_(k-1) whose fibre is reported.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Option<Vec<String>>,
    },
    /// Z_k(tau) from the cocycle (0, z^-k tau).
    Deform {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Checks the embedding of the family into Hirzebruch surfaces.
    HirzebruchCheck {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        k: i64,
    },
    /// Splitting type on the line, of a u-free transition or of an extension restricted to the zero section.
    SplitType {
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["k", "j", "sigma"])]
        transition: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..), requires_all = ["j", "sigma"])]
        k: Option<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "k")]
        tau: Option<Vec<String>>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Frame changes splitting an extension on a deformed surface.
    CertifySplit {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Computable part of the local charge.
    Charge {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        j: u32,
        /// Extension class; the bundle is [[z^j, z^j sigma], [0, z^-j]].
        #[arg(long, allow_hyphen_values = true, conflicts_with = "transition")]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        transition: Option<String>,
        #[arg(long, value_parser = input::window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Dimension of the instanton moduli of splitting type j.
    ModuliDim {
        #[arg(long)]
        j: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        k: i64,
        #[arg(long)]
        deformed: bool,
    },
    /// Regression table of H^1(Z_k(tau), O(-n)).
    Golden {
        #[command(subcommand)]
        mode: GoldenMode,
    },
}

#[derive(Subcommand, Debug)]
pub enum GoldenMode {
    /// Writes the table to a file, or to stdout without --out.
    Generate {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recomputes every row and stops at the first mismatch.
    Verify { path: PathBuf },
}

pub fn policy(max_steps: usize) -> GrowthPolicy {
    GrowthPolicy { max_steps, ..GrowthPolicy::default() }
}

fn rationals(list: &[String]) -> Result<Vec<Rational>, CliError> {
    list.iter().map(|t| parse_rational(t)).collect::<Result<_, _>>().map_err(CliError::usage)
}

fn coords(c: &HirzebruchCoords, chart: Chart) -> Value {
    let tag = |xs: &[ParamPoly]| -> Vec<ParamPoly> { xs.iter().map(|x| x.clone().with_chart(chart)).collect() };
    json!({ "base": strings(&tag(&c.base)), "fiber": strings(&tag(&c.fiber)) })
}

pub fn run(cmd: &Command, max_steps: usize) -> Result<Value, CliError> {
    let policy = policy(max_steps);
    match cmd {
        Command::H1 { surface, n, transition, window } => {
            let s = surface.surface()?;
            let t = match (n, transition) {
                (_, Some(t)) => input::matrix(t)?,
                (Some(n), None) => LineBundleSpec::new(-n).transition(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let r = match window {
                Some(w) => h1(&s, &t, *w),
                None => {
                    let w0 = match n {
                        Some(n) => Window::for_line_bundle(s.k(), *n),
                        None => Window::for_transition(s.k(), &t),
                    };
                    h1_stabilized(&s, &t, w0, policy)
                }
            }
            .map_err(CliError::math)?;
            let mut v = output::cohomology(&r);
            v["surface"] = json!(s);
            Ok(v)
        }
        Command::H0 { surface, n, window } => {
            let s = surface.surface()?;
            let w = window.unwrap_or_else(|| Window::for_line_bundle(s.k(), n.abs()));
            let r = h0_basis(&s, *n, w).map_err(CliError::math)?;
            let mut v = output::cohomology(&r);
            v["surface"] = json!(s);
            Ok(v)
        }
        Command::NormalForm { surface, n, sigma, window } => {
            let s = surface.surface()?;
            let sigma = input::poly(sigma)?;
            let w = window.unwrap_or_else(|| Window::for_line_bundle(s.k(), *n));
            let t = LineBundleSpec::new(-n).transition();
            let nf = normal_form(&VectorCocycle::scalar(sigma.clone()), &s, &t, w).map_err(CliError::math)?;
            Ok(json!({
                "sigma": sigma.to_string(),
                "normalForm": nf.to_string(),
                "trivial": nf.is_zero(),
                "window": output::window(w),
                "surface": s,
            }))
        }
        Command::CertifyTrivial { surface, n, sigma, window } => {
            let s = surface.surface()?;
            let sigma = input::poly(sigma)?;
            let w = window.unwrap_or_else(|| Window::for_line_bundle(s.k(), *n));
            let c = triviality_certificate(&sigma, &s, *n, w).map_err(CliError::math)?;
            Ok(json!({ "certificate": c, "window": output::window(w), "surface": s }))
        }
        Command::Tangent { k } => {
            let r = tangent_h1(*k).map_err(CliError::math)?;
            Ok(output::cohomology(&r))
        }
        Command::ExtBasis { k } => {
            let b = ext_basis_tangent(*k).map_err(CliError::math)?;
            Ok(json!({ "extBasis": strings(&b.ext_basis), "h1Basis": strings(&b.h1_basis) }))
        }
        Command::Integrate { k, sigma } => {
            let sigma = input::poly(sigma)?;
            let class = TangentExtensionClass::from_sigma(*k, &sigma).map_err(CliError::usage)?;
            let r = integrability_analysis(*k, &class).map_err(CliError::math)?;
            let mut v = json!(r);
            if r.verdict == Verdict::NotAJacobian {
                if let Some(c) = jacobian_multiple(*k, &class) {
                    v["jacobianMultiple"] = json!(format_rational(&c));
                }
            }
            if r.is_integrable() {
                let n = normalize_deformation(*k, &r.tau, &r.t_k, &r.c).map_err(CliError::math)?;
                v["surface"] = json!(n.surface);
            }
            Ok(v)
        }
        Command::Family { k, at } => {
            let (fam, ks) = family_and_ks(*k).map_err(CliError::math)?;
            let transition: Value = fam.transition().iter().map(|r| strings(r)).collect();
            let mut v = json!({
                "k": k,
                "baseDim": fam.base_dim(),
                "parameters": fam.names(),
                "transition": transition,
                "ks": {
                    "images": strings(&ks.images),
                    "basis": strings(&ks.basis),
                    "matrix": output::rational_matrix(&ks.matrix),
                    "identity": ks.is_identity(),
                },
            });
            if let Some(at) = at {
                let t = rationals(at)?;
                if t.len() != fam.base_dim() {
                    return Err(CliError::Usage(format!("--at needs {} values", fam.base_dim())));
                }
                v["fiber"] = json!(fam.fiber(&t).map_err(CliError::math)?);
            }
            Ok(v)
        }
        Command::Deform { surface } => {
            let tau = input::tau_poly(surface.surface()?.tau());
            let s = deform_by_cocycle(surface.k, &tau).map_err(CliError::math)?;
            let g = s.glue();
            Ok(json!({ "surface": s, "glue": { "xi": g.first.to_string(), "v": g.second.to_string() } }))
        }
        Command::HirzebruchCheck { k } => {
            let c = hirzebruch_embed_check(*k).map_err(CliError::math)?;
            Ok(json!({
                "k": k,
                "residualU": strings(&c.residual_u),
                "residualV": strings(&c.residual_v),
                "overlapConsistent": c.overlap_consistent,
                "reducesToEmbedding": c.reduces_to_embedding,
                "holds": c.holds(),
                "uChart": coords(&c.u_chart, Chart::U),
                "vChart": coords(&c.v_chart, Chart::V),
            }))
        }
        Command::SplitType { transition, k, tau, j, sigma, window } => {
            let t = match (transition, k) {
                (Some(t), _) => input::matrix(t)?,
                (None, Some(k)) => {
                    let args = SurfaceArgs { k: *k, tau: tau.clone(), tau_poly: None };
                    let s = args.surface()?;
                    let e = ExtensionClass::new(j.unwrap_or(0), input::poly(sigma.as_deref().unwrap_or("0"))?);
                    restrict_to_zero_section(&extension_to_transition(&e), &s).map_err(CliError::math)?
                }
                (None, None) => return Err(CliError::Usage("give --transition or --k, --j and --sigma".into())),
            };
            let w = match window {
                Some(w) => *w,
                None => splitting_window(&t).map_err(CliError::math)?,
            };
            let ty = splitting_type_p1(&t, w).map_err(CliError::math)?;
            Ok(json!({
                "splitting_type": ty,
                "degree": ty.degree(),
                "restriction": output::poly_matrix(&t),
                "window": output::window(w),
            }))
        }
        Command::CertifySplit { surface, j, sigma, window } => {
            let s = surface.surface()?;
            let e = ExtensionClass::new(*j, input::poly(sigma)?);
            let w = window.unwrap_or_else(|| Window::for_line_bundle(s.k(), 2 * *j as i64));
            let c = split_certificate_with(&s, &e, w, policy).map_err(CliError::math)?;
            let verified = c.verify(&s, &extension_to_transition(&e)).map_err(CliError::math)?;
            Ok(json!({
                "certificate": {
                    "A_U": output::poly_matrix(&c.a_u),
                    "A_V": output::poly_matrix(&c.a_v),
                    "target": output::poly_matrix(&c.target),
                    "residual": output::poly_matrix(&c.residual),
                    "exact": c.exact,
                },
                "verified": verified,
                "window": output::window(c.window_used),
                "surface": s,
            }))
        }
        Command::Charge { surface, j, sigma, transition, window } => {
            let s = surface.surface()?;
            let t: PolyMatrix = match (sigma, transition) {
                (_, Some(t)) => input::matrix(t)?,
                (Some(sigma), None) => extension_to_transition(&ExtensionClass::new(*j, input::poly(sigma)?)),
                (None, None) => extension_to_transition(&ExtensionClass::new(*j, Default::default())),
            };
            let w = window.unwrap_or_else(|| Window::for_transition(s.k(), &t));
            let r = charge_report(&s, &t, *j as i64, w).map_err(CliError::math)?;
            Ok(json!({
                "r1Dim": r.r1_dim,
                "qDim": r.q_dim,
                "splittingOk": r.splitting_ok,
                "stabilized": r.stabilized,
                "window": output::window(r.window_used),
                "surface": s,
            }))
        }
        Command::ModuliDim { j, k, deformed } => {
            let d = moduli_dimension(*j, *k, *deformed).map_err(CliError::math)?;
            let mut v = json!({ "j": j, "k": k, "deformed": deformed, "moduliDimension": d });
            if !deformed {
                v["rawParameterCount"] = json!(raw_parameter_count(*j, *k).map_err(CliError::math)?);
            }
            Ok(v)
        }
        Command::Golden { mode } => match mode {
            GoldenMode::Generate { out } => golden::generate(out.as_deref(), policy),
            GoldenMode::Verify { path } => golden::verify(path, policy),
        },
    }
}
