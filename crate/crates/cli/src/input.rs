//! Flag values shared by several subcommands.

use clap::Args;
use localsurf::algebra::{parse_rational, BiLaurent, Monomial, Rational};
use localsurf::cohomology::Window;
use localsurf::{PolyMatrix, SurfaceSpec};

use crate::CliError;

#[derive(Args, Debug, Clone)]
pub struct SurfaceArgs {
    /// Degree k of Z_k.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k: i64,
    /// Deformation coefficients t_1,...,t_(k-1); missing trailing entries are 0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "tau_poly")]
    pub tau: Option<Vec<String>>,
    /// Deformation as a polynomial in z, e.g. "z + 1/2*z^3".
    #[arg(long, allow_hyphen_values = true)]
    pub tau_poly: Option<String>,
}

impl SurfaceArgs {
    pub fn surface(&self) -> Result<SurfaceSpec, CliError> {
        if let Some(p) = &self.tau_poly {
            let poly = poly(p)?;
            return SurfaceSpec::from_tau_poly(self.k, &poly).map_err(CliError::usage);
        }
        let mut tau: Vec<Rational> = match &self.tau {
            Some(list) => list.iter().map(|t| parse_rational(t)).collect::<Result<_, _>>().map_err(CliError::usage)?,
            None => vec![],
        };
        let len = (self.k - 1) as usize;
        if tau.len() > len {
            return Err(CliError::Usage(format!("--tau has {} entries but k - 1 = {len}", tau.len())));
        }
        tau.resize(len, Rational::default());
        SurfaceSpec::new(self.k, tau).map_err(CliError::usage)
    }
}

pub fn poly(s: &str) -> Result<BiLaurent, CliError> {
    s.parse().map_err(CliError::usage)
}

/// `a, b; c, d` with rows separated by `;`.
pub fn matrix(s: &str) -> Result<PolyMatrix, CliError> {
    let rows = s
        .split(';')
        .map(|r| r.split(',').map(poly).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    PolyMatrix::from_rows(rows).map_err(CliError::usage)
}

pub fn window(s: &str) -> Result<Window, String> {
    s.parse::<Window>().map_err(|e| e.to_string())
}

/// `sum t_i z^i` from a coefficient list.
pub fn tau_poly(tau: &[Rational]) -> BiLaurent {
    BiLaurent::from_terms(tau.iter().enumerate().map(|(i, t)| (Monomial::new(i as i64 + 1, 0), t.clone())))
}
