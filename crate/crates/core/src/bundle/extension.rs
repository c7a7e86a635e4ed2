use crate::algebra::{BiLaurent, PolyMatrix};
use crate::surface::SurfaceSpec;

use super::BundleError;

/// Extension of `O(-j)` by `O(j)` with class `sigma` in `H^1(O(-2j))`.
/// The extension data on `U` is `p = z^j sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionClass {
    pub j: u32,
    pub sigma: BiLaurent,
}

impl ExtensionClass {
    pub fn new(j: u32, sigma: BiLaurent) -> Self {
        ExtensionClass { j, sigma: sigma.untagged() }
    }

    /// From extension data: `sigma = z^-j p`.
    pub fn from_p(j: u32, p: &BiLaurent) -> Self {
        Self::new(j, p.shift(-(j as i64), 0))
    }

    pub fn p(&self) -> BiLaurent {
        self.sigma.shift(self.j as i64, 0)
    }

    /// Every term of `sigma` vanishes on the zero section.
    pub fn vanishes_on_zero_section(&self) -> bool {
        self.sigma.terms().all(|(m, _)| m.u >= 1)
    }
}

/// `[[z^j, z^j sigma], [0, z^-j]]`.
pub fn extension_to_transition(e: &ExtensionClass) -> PolyMatrix {
    let j = e.j as i64;
    PolyMatrix::from_rows(vec![
        vec![BiLaurent::mono(j, 0), e.p()],
        vec![BiLaurent::zero(), BiLaurent::mono(-j, 0)],
    ])
    .expect("2x2")
}

/// Sets `u = 0` in every entry.
pub fn restrict_to_zero_section(t: &PolyMatrix, s: &SurfaceSpec) -> Result<PolyMatrix, BundleError> {
    if s.is_deformed() {
        return Err(BundleError::NoZeroSection);
    }
    Ok(t.map(BiLaurent::at_second_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn transitions() {
        let t = extension_to_transition(&ExtensionClass::new(1, p("z^-1")));
        assert_eq!(t.to_string(), "[[z, 1], [0, z^-1]]");
        assert_eq!(t.det(), p("1"));
        let d = extension_to_transition(&ExtensionClass::new(2, BiLaurent::zero()));
        assert_eq!(d, PolyMatrix::diagonal(vec![p("z^2"), p("z^-2")]));
        let e = ExtensionClass::from_p(3, &p("z^2*u"));
        assert_eq!(e.sigma, p("z^-1*u"));
        assert_eq!(e.p(), p("z^2*u"));
    }

    #[test]
    fn restriction() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let t = extension_to_transition(&ExtensionClass::new(2, p("z^-1*u")));
        let r = restrict_to_zero_section(&t, &s).unwrap();
        assert_eq!(r, PolyMatrix::diagonal(vec![p("z^2"), p("z^-2")]));
        assert_eq!(r.det_degree(), t.det_degree());
        let d = SurfaceSpec::new(2, vec![int(1)]).unwrap();
        assert_eq!(restrict_to_zero_section(&t, &d), Err(BundleError::NoZeroSection));
    }
}
