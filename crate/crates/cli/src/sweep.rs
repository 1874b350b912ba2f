use crate::args::CommonArgs;
use crate::error::CliError;
use numeric_core::rational::{int, rational_string};
use numeric_core::{parse_rational, Rational};

pub const MAX_CELLS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    K,
    J,
    Mu,
    Kappa,
    KappaMax,
    Eta,
    Rho,
    G,
}

impl Field {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "k" => Field::K,
            "j" => Field::J,
            "mu" => Field::Mu,
            "kappa" => Field::Kappa,
            "kappa-max" | "kappa_max" => Field::KappaMax,
            "eta" => Field::Eta,
            "rho" => Field::Rho,
            "G" | "g" => Field::G,
            _ => return Err(CliError::input(format!("unknown sweep field {s:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::K => "k",
            Field::J => "j",
            Field::Mu => "mu",
            Field::Kappa => "kappa",
            Field::KappaMax => "kappa-max",
            Field::Eta => "eta",
            Field::Rho => "rho",
            Field::G => "G",
        }
    }

    pub fn apply(self, a: &mut CommonArgs, v: &Rational) {
        let v = v.clone();
        match self {
            Field::K => a.k = Some(v),
            Field::J => a.j = Some(v),
            Field::Mu => a.mu = Some(v),
            Field::Kappa => a.kappa = Some(rational_string(&v)),
            Field::KappaMax => a.kappa_max = Some(v),
            Field::Eta => a.eta = Some(v),
            Field::Rho => a.rho = Some(v),
            Field::G => a.g = Some(v),
        }
    }
}

/// START:END:STEP with END included when it lies on the grid.
pub fn parse_range(s: &str) -> Result<Vec<Rational>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::input(format!("range {s:?} must be START:END:STEP")));
    }
    let p = |x: &str| parse_rational(x).map_err(CliError::input);
    let (start, end, step) = (p(parts[0])?, p(parts[1])?, p(parts[2])?);
    if step <= int(0) {
        return Err(CliError::input(format!("step must be positive in {s:?}")));
    }
    if end < start {
        return Err(CliError::input(format!("empty range {s:?}")));
    }
    let mut out = Vec::new();
    let mut x = start;
    while x <= end {
        if out.len() >= MAX_CELLS {
            return Err(CliError::input(format!("range {s:?} has more than {MAX_CELLS} points")));
        }
        out.push(x.clone());
        x += &step;
    }
    Ok(out)
}

pub fn parse_sweep(s: &str) -> Result<(Field, Vec<Rational>), CliError> {
    let (f, r) = s.split_once('=').ok_or_else(|| CliError::input(format!("sweep {s:?} must be FIELD=START:END:STEP")))?;
    Ok((Field::parse(f.trim())?, parse_range(r.trim())?))
}

/// All sweeps of `args`, including a ranged --kappa, in row-major order.
pub fn grid(args: &CommonArgs) -> Result<Vec<(Field, Vec<Rational>)>, CliError> {
    let mut axes = Vec::new();
    if let Some(k) = &args.kappa {
        if k.contains(':') {
            axes.push((Field::Kappa, parse_range(k)?));
        }
    }
    for s in &args.sweep {
        let axis = parse_sweep(s)?;
        if axes.iter().any(|(f, _)| *f == axis.0) {
            return Err(CliError::input(format!("field {} swept twice", axis.0.name())));
        }
        axes.push(axis);
    }
    let cells: usize = axes.iter().map(|(_, v)| v.len()).product();
    if cells > MAX_CELLS {
        return Err(CliError::input(format!("sweep has {cells} cells, limit {MAX_CELLS}")));
    }
    Ok(axes)
}

pub fn cells(axes: &[(Field, Vec<Rational>)]) -> Vec<Vec<(Field, Rational)>> {
    let mut out = vec![Vec::new()];
    for (f, values) in axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut c = prefix.clone();
                    c.push((*f, v.clone()));
                    c
                })
            })
            .collect();
    }
    out
}
