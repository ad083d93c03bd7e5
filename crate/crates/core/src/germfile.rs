//! Line-oriented germ-file format:
//!
//! ```text
//! vars: x,y,z
//! param: t                          # optional deformation parameter
//! equations:                        # one polynomial per line
//!   x*y
//!   y*z
//!   x*z
//! end
//! parametrization: u^3, u^4, u^5    # optional, single line
//! samples: 0, 1, 2                  # optional, for family/whitney
//! ```
//!
//! '#' starts a comment anywhere on a line. At least one of equations /
//! parametrization must be present. Equation polynomials live in the variable
//! ring, extended by the parameter (as the last variable) when one is
//! declared; parametrization entries live in (u) or (u, param).

use std::str::FromStr;

use crate::basis::Budget;
use crate::error::{Error, Result};
use crate::invariants::{CurveGerm, FamilyGerm};
use crate::poly::{parse_poly, Poly, Rat, Ring};

/// Parsed germ file, with polynomials already checked against the declared
/// variables.
#[derive(Debug, Clone)]
pub struct GermFile {
    pub vars: Vec<String>,
    pub param: Option<String>,
    /// In the ring of `vars`, extended by `param` as last variable if present.
    pub equations: Vec<Poly>,
    /// In the ring (u) or (u, param).
    pub parametrization: Option<Vec<Poly>>,
    pub samples: Vec<Rat>,
}

impl GermFile {
    /// Ring of the curve variables only.
    pub fn curve_ring(&self) -> Ring {
        Ring::new(self.vars.clone())
    }

    fn equation_ring(&self) -> Ring {
        match &self.param {
            Some(p) => self.curve_ring().extended(p),
            None => self.curve_ring(),
        }
    }

    pub fn is_family(&self) -> bool {
        self.param.is_some()
    }

    /// The file as a single curve germ. Families are rejected; a file with
    /// only a parametrization is implicitized.
    pub fn curve_germ(&self, budget: &mut Budget) -> Result<CurveGerm> {
        if self.is_family() {
            return Err(Error::Degenerate(
                "file declares a deformation parameter; use a family command".into(),
            ));
        }
        let ring = self.curve_ring();
        if self.equations.is_empty() {
            let phi = self.parametrization.clone().unwrap();
            let ideal = crate::ideal::implicitize(&phi, &ring, budget)?;
            let germ = CurveGerm::new(ring, ideal.gens)?;
            Ok(germ.with_parametrization(phi))
        } else {
            let germ = CurveGerm::new(ring, self.equations.clone())?;
            Ok(match &self.parametrization {
                Some(phi) => germ.with_parametrization(phi.clone()),
                None => germ,
            })
        }
    }

    /// The file as a one-parameter family.
    pub fn family_germ(&self) -> Result<FamilyGerm> {
        let Some(param) = &self.param else {
            return Err(Error::Degenerate(
                "family commands need a 'param:' declaration".into(),
            ));
        };
        Ok(FamilyGerm {
            curve_ring: self.curve_ring(),
            t_name: param.clone(),
            equations: self.equations.clone(),
            parametrization: self.parametrization.clone(),
            samples: self.samples.clone(),
        })
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_name_list(body: &str, lineno: usize) -> Result<Vec<String>> {
    let names: Vec<String> = body
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(Error::parse(lineno, "expected a comma-separated name list"));
    }
    for n in &names {
        let ok = n.chars().next().map(|c| c.is_ascii_alphabetic()) == Some(true)
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::parse(lineno, format!("invalid variable name '{n}'")));
        }
    }
    Ok(names)
}

fn parse_rational(text: &str, lineno: usize) -> Result<Rat> {
    Rat::from_str(text.trim())
        .map_err(|_| Error::parse(lineno, format!("invalid rational number '{}'", text.trim())))
}

/// Parses the germ-file text. Polynomials are validated against the declared
/// variable lists; all errors carry the offending line number.
pub fn parse_germ_file(text: &str) -> Result<GermFile> {
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut param: Option<String> = None;
    let mut raw_equations: Vec<(String, usize)> = Vec::new();
    let mut raw_parametrization: Option<(Vec<String>, usize)> = None;
    let mut samples: Vec<Rat> = Vec::new();
    let mut in_equations = false;
    let mut seen_equations_section = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if in_equations {
            if line == "end" {
                in_equations = false;
            } else {
                raw_equations.push((line.to_string(), lineno));
            }
            continue;
        }
        if let Some(body) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(Error::parse(lineno, "duplicate 'vars:' section"));
            }
            vars = Some((parse_name_list(body, lineno)?, lineno));
        } else if let Some(body) = line.strip_prefix("param:") {
            if param.is_some() {
                return Err(Error::parse(lineno, "duplicate 'param:' section"));
            }
            let names = parse_name_list(body, lineno)?;
            if names.len() != 1 {
                return Err(Error::parse(lineno, "exactly one parameter name expected"));
            }
            param = Some(names.into_iter().next().unwrap());
        } else if line == "equations:" {
            if seen_equations_section {
                return Err(Error::parse(lineno, "duplicate 'equations:' section"));
            }
            seen_equations_section = true;
            in_equations = true;
        } else if let Some(body) = line.strip_prefix("parametrization:") {
            if raw_parametrization.is_some() {
                return Err(Error::parse(lineno, "duplicate 'parametrization:' section"));
            }
            let entries: Vec<String> = body
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if entries.is_empty() {
                return Err(Error::parse(lineno, "empty parametrization"));
            }
            raw_parametrization = Some((entries, lineno));
        } else if let Some(body) = line.strip_prefix("samples:") {
            for part in body.split(',') {
                if part.trim().is_empty() {
                    continue;
                }
                samples.push(parse_rational(part, lineno)?);
            }
        } else {
            return Err(Error::parse(lineno, format!("unrecognized line '{line}'")));
        }
    }
    if in_equations {
        return Err(Error::parse(
            text.lines().count(),
            "unterminated 'equations:' section (missing 'end')",
        ));
    }

    let Some((vars, vars_line)) = vars else {
        return Err(Error::parse(1, "missing section: 'vars:' is required"));
    };
    if raw_equations.is_empty() && raw_parametrization.is_none() {
        return Err(Error::parse(
            1,
            "missing section: need 'equations:' or 'parametrization:'",
        ));
    }
    {
        let mut all = vars.clone();
        if let Some(p) = &param {
            all.push(p.clone());
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != all.len() {
            return Err(Error::parse(vars_line, "variable names must be distinct"));
        }
    }

    let mut file = GermFile {
        vars,
        param,
        equations: Vec::new(),
        parametrization: None,
        samples,
    };
    let eq_ring = file.equation_ring();
    for (src, lineno) in raw_equations {
        let p = parse_poly(&src, &eq_ring)
            .map_err(|e| Error::parse(lineno, format!("{e}")))?;
        file.equations.push(p);
    }
    if let Some((entries, lineno)) = raw_parametrization {
        if entries.len() != file.vars.len() {
            return Err(Error::parse(
                lineno,
                format!(
                    "parametrization has {} components for {} variables",
                    entries.len(),
                    file.vars.len()
                ),
            ));
        }
        let mut names = vec!["u".to_string()];
        if let Some(p) = &file.param {
            names.push(p.clone());
        }
        let pring = Ring::new(names);
        let mut phi = Vec::new();
        for src in entries {
            let p = parse_poly(&src, &pring)
                .map_err(|e| Error::parse(lineno, format!("{e}")))?;
            // map into (u, param) shape even for plain curves so downstream
            // code sees a consistent layout only when a parameter exists
            phi.push(p);
        }
        file.parametrization = Some(phi);
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::DEFAULT_STEP_BUDGET;
    use crate::poly::rat_int;

    #[test]
    fn parse_three_lines_file() {
        let text = "\
# the union of the three coordinate axes
vars: x, y, z
equations:
  x*y
  y*z
  x*z
end
";
        let f = parse_germ_file(text).unwrap();
        assert_eq!(f.vars, vec!["x", "y", "z"]);
        assert_eq!(f.equations.len(), 3);
        assert!(f.param.is_none());
        let germ = f.curve_germ(&mut Budget::new(DEFAULT_STEP_BUDGET)).unwrap();
        assert_eq!(germ.equations.len(), 3);
    }

    #[test]
    fn parse_whitney_family_file() {
        let text = "\
vars: x, y, z, w
param: t
parametrization: u^4, u^7 + t*u^6, u^9, u^10
samples: 0, 1
";
        let f = parse_germ_file(text).unwrap();
        assert!(f.is_family());
        let fam = f.family_germ().unwrap();
        assert_eq!(fam.samples, vec![rat_int(0), rat_int(1)]);
        assert_eq!(fam.parametrization.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn parse_parametrized_curve_file() {
        let text = "vars: x, y, z\nparametrization: u^3, u^4, u^5\n";
        let f = parse_germ_file(text).unwrap();
        let germ = f.curve_germ(&mut Budget::new(DEFAULT_STEP_BUDGET)).unwrap();
        assert_eq!(germ.ring.nvars(), 3);
        assert!(germ.parametrization.is_some());
        assert!(germ.equations.len() >= 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_germ_file("") {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("missing section")),
            other => panic!("expected parse error, got {other:?}"),
        }
        // unknown variable in an equation
        let text = "vars: x, y\nequations:\n  x*q\nend\n";
        match parse_germ_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        // unterminated section
        let text = "vars: x, y\nequations:\n  x*y\n";
        assert!(matches!(parse_germ_file(text), Err(Error::Parse { .. })));
        // bad sample
        let text = "vars: x, y\nequations:\n  x*y\nend\nsamples: 1, oops\n";
        match parse_germ_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        // duplicate variable names
        let text = "vars: x, x\nequations:\n  x\nend\n";
        assert!(matches!(parse_germ_file(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn family_with_equations() {
        let text = "\
vars: x, y, z
param: t
equations:
  x*y + t*x + t^2
  y*z + t*y + t^2
  z*x + t*z + t^2
end
samples: 1, 2
";
        let f = parse_germ_file(text).unwrap();
        let fam = f.family_germ().unwrap();
        assert_eq!(fam.equations.len(), 3);
        assert_eq!(fam.full_ring().nvars(), 4);
        // a family file is not a curve germ
        assert!(f.curve_germ(&mut Budget::new(DEFAULT_STEP_BUDGET)).is_err());
    }

    #[test]
    fn fractional_samples() {
        let text = "vars: x, y\nequations:\n  y^2 - x^3\nend\nsamples: 1/2, -3\n";
        let f = parse_germ_file(text).unwrap();
        assert_eq!(f.samples[0], Rat::new(1.into(), 2.into()));
        assert_eq!(f.samples[1], rat_int(-3));
    }
}
