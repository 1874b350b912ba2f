use numeric_core::rational::{as_natural, int, rat, rational_string, to_f64};
use numeric_core::Rational;
use serde::{Serialize, Serializer};

/// Physical parameters. `mu` follows the σ0 coefficient `(1/2 + 2μ)` of H.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorParams {
    pub j: Rational,
    pub mu: Rational,
    pub kappa: f64,
    pub k: Rational,
}

impl SectorParams {
    pub fn new(j: Rational, mu: Rational, kappa: f64, k: Rational) -> Self {
        SectorParams { j, mu, kappa, k }
    }

    /// True iff `j` is a nonnegative integer.
    pub fn realizable_sector(&self) -> bool {
        as_natural(&self.j).is_some()
    }

    pub fn j_index(&self) -> Option<usize> {
        as_natural(&self.j).map(|v| v as usize)
    }

    pub fn mu_f64(&self) -> f64 {
        to_f64(&self.mu)
    }

    pub fn with_kappa(&self, kappa: f64) -> Self {
        SectorParams { kappa, ..self.clone() }
    }
}

impl Serialize for SectorParams {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SectorParams", 5)?;
        st.serialize_field("j", &rational_string(&self.j))?;
        st.serialize_field("mu", &rational_string(&self.mu))?;
        st.serialize_field("kappa", &self.kappa)?;
        st.serialize_field("k", &rational_string(&self.k))?;
        st.serialize_field("realizable_sector", &self.realizable_sector())?;
        st.end()
    }
}

/// Exchanging the two modes together with the spin states maps the sector
/// `j` of H(μ) onto the sector `-j-1` of H(-1/2 - μ).
pub fn mirror_sector(j: &Rational, mu: &Rational) -> (Rational, Rational) {
    (-j - int(1), rat(-1, 2) - mu)
}

/// How a parameter point can be checked numerically.
#[derive(Clone, Debug, PartialEq)]
pub enum OracleTarget {
    Direct(SectorParams),
    Mirrored(SectorParams),
    Unavailable,
}

impl OracleTarget {
    pub fn for_params(p: &SectorParams) -> Self {
        if p.realizable_sector() {
            return OracleTarget::Direct(p.clone());
        }
        let (j, mu) = mirror_sector(&p.j, &p.mu);
        let q = SectorParams { j, mu, ..p.clone() };
        if q.realizable_sector() {
            OracleTarget::Mirrored(q)
        } else {
            OracleTarget::Unavailable
        }
    }

    pub fn params(&self) -> Option<&SectorParams> {
        match self {
            OracleTarget::Direct(p) | OracleTarget::Mirrored(p) => Some(p),
            OracleTarget::Unavailable => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realizability() {
        assert!(SectorParams::new(int(0), int(0), 0.0, int(0)).realizable_sector());
        assert!(!SectorParams::new(rat(1, 2), int(0), 0.0, int(0)).realizable_sector());
        assert!(!SectorParams::new(int(-1), int(0), 0.0, int(0)).realizable_sector());
    }

    #[test]
    fn mirror_is_an_involution() {
        let (j, mu) = (rat(-3, 1), rat(1, 4));
        let (j1, mu1) = mirror_sector(&j, &mu);
        assert_eq!((j1.clone(), mu1.clone()), (int(2), rat(-3, 4)));
        assert_eq!(mirror_sector(&j1, &mu1), (j, mu));
    }

    #[test]
    fn half_integer_sectors_have_no_oracle() {
        let p = SectorParams::new(rat(-3, 2), int(0), 1.0, int(1));
        assert_eq!(OracleTarget::for_params(&p), OracleTarget::Unavailable);
        let p = SectorParams::new(int(-1), int(0), 1.0, int(1));
        assert!(matches!(OracleTarget::for_params(&p), OracleTarget::Mirrored(q) if q.j == int(0) && q.mu == rat(-1, 2)));
    }
}
