//! Problem input files.
//!
//! UTF-8 text with three sections and `#` comments:
//!
//! ```text
//! vars: x y z w
//! f: x*y*z + x*y*w + x*z*w + y*z*w
//! points:
//! [1,0,0,0]
//! [0,1,0,0]
//! ```

use std::path::Path;

use num_traits::Zero;
use syzygy_core::poly::HomogeneousPoly;
use syzygy_core::rational::Rational;
use syzygy_core::Hypersurface;

use crate::parse::{parse_point, parse_poly};

#[derive(Debug, Clone, Default)]
pub struct ProblemInput {
    pub variables: Vec<String>,
    pub f_text: String,
    pub point_texts: Vec<String>,
}

/// Validated problem: f homogeneous of degree >= 2 and every supplied point
/// singular on V(f).
#[derive(Debug, Clone)]
pub struct Problem {
    pub names: Vec<String>,
    pub f_text: String,
    pub hypersurface: Hypersurface,
    pub points: Vec<Vec<Rational>>,
}

pub fn read_problem_file(path: &Path) -> Result<ProblemInput, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_problem_text(&text)
}

pub fn parse_problem_text(text: &str) -> Result<ProblemInput, String> {
    let mut input = ProblemInput::default();
    let mut in_points = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = lineno + 1;
        if let Some(rest) = line.strip_prefix("vars:") {
            input.variables = rest.split_whitespace().map(str::to_string).collect();
            if input.variables.is_empty() {
                return Err(format!("line {at}: 'vars:' lists no variables"));
            }
            in_points = false;
        } else if let Some(rest) = line.strip_prefix("f:") {
            input.f_text = rest.trim().to_string();
            in_points = false;
        } else if line == "points:" {
            in_points = true;
        } else if in_points && line.starts_with('[') {
            input.point_texts.push(line.to_string());
        } else {
            return Err(format!(
                "line {at}: expected 'vars:', 'f:', 'points:' or a bracketed point, got '{line}'"
            ));
        }
    }
    if input.variables.is_empty() {
        return Err("missing 'vars:' section".into());
    }
    if input.f_text.is_empty() {
        return Err("missing 'f:' section".into());
    }
    Ok(input)
}

pub fn validate(input: &ProblemInput) -> Result<Problem, String> {
    let mut seen = std::collections::BTreeSet::new();
    for v in &input.variables {
        if !seen.insert(v.clone()) {
            return Err(format!("duplicate variable name '{v}'"));
        }
    }
    let f: HomogeneousPoly =
        parse_poly(&input.f_text, &input.variables).map_err(|e| format!("in f: {e}"))?;
    let hypersurface = Hypersurface::new(f).map_err(|e| e.to_string())?;
    let nvars = input.variables.len();

    let mut points = Vec::new();
    for (i, text) in input.point_texts.iter().enumerate() {
        let q = parse_point(text).map_err(|e| format!("point #{i}: {e}"))?;
        if q.len() != nvars {
            return Err(format!(
                "point #{i}: expected {nvars} coordinates, got {}",
                q.len()
            ));
        }
        if q.iter().all(Zero::is_zero) {
            return Err(format!("point #{i}: all coordinates are zero"));
        }
        if !hypersurface.f().evaluate(&q).is_zero() {
            return Err(format!("point #{i}: f does not vanish there"));
        }
        if hypersurface.gradient_at(&q).iter().any(|g| !g.is_zero()) {
            return Err(format!(
                "point #{i}: not a singular point (the gradient does not vanish)"
            ));
        }
        points.push(q);
    }
    // reject projective duplicates
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if projectively_equal(&points[i], &points[j]) {
                return Err(format!("points #{i} and #{j} coincide projectively"));
            }
        }
    }
    Ok(Problem {
        names: input.variables.clone(),
        f_text: input.f_text.clone(),
        hypersurface,
        points,
    })
}

fn projectively_equal(a: &[Rational], b: &[Rational]) -> bool {
    let lead = match a.iter().position(|c| !c.is_zero()) {
        Some(i) => i,
        None => return false,
    };
    if b[lead].is_zero() {
        return false;
    }
    let scale = &a[lead] / &b[lead];
    a.iter().zip(b).all(|(x, y)| *x == y * &scale)
}

/// Resolve a chart argument given either as a variable name or an index.
pub fn resolve_chart(names: &[String], arg: &str) -> Result<usize, String> {
    if let Some(i) = names.iter().position(|n| n == arg) {
        return Ok(i);
    }
    if let Ok(i) = arg.parse::<usize>() {
        if i < names.len() {
            return Ok(i);
        }
    }
    Err(format!(
        "unknown chart '{arg}': expected one of {} or an index below {}",
        names.join(", "),
        names.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAYLEY: &str = "\n# Cayley cubic\nvars: x y z w\nf: x*y*z+x*y*w+x*z*w+y*z*w\npoints:\n[1,0,0,0]\n[0,1,0,0]\n[0,0,1,0]\n[0,0,0,1]\n";

    #[test]
    fn parses_and_validates_cayley() {
        let input = parse_problem_text(CAYLEY).unwrap();
        let problem = validate(&input).unwrap();
        assert_eq!(problem.hypersurface.degree(), 3);
        assert_eq!(problem.points.len(), 4);
    }

    #[test]
    fn rejects_smooth_point() {
        let text = CAYLEY.replace("[0,0,0,1]", "[1,1,0,0]");
        let input = parse_problem_text(&text).unwrap();
        let e = validate(&input).unwrap_err();
        assert!(e.contains("not a singular point"), "{e}");
    }

    #[test]
    fn rejects_point_off_the_hypersurface() {
        let text = CAYLEY.replace("[0,0,0,1]", "[1,1,1,1]");
        let input = parse_problem_text(&text).unwrap();
        let e = validate(&input).unwrap_err();
        assert!(e.contains("does not vanish"), "{e}");
    }

    #[test]
    fn rejects_projective_duplicates() {
        let text = CAYLEY.replace("[0,0,0,1]", "[2,0,0,0]");
        let input = parse_problem_text(&text).unwrap();
        let e = validate(&input).unwrap_err();
        assert!(e.contains("coincide projectively"), "{e}");
    }

    #[test]
    fn chart_resolution() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(resolve_chart(&names, "z").unwrap(), 2);
        assert_eq!(resolve_chart(&names, "1").unwrap(), 1);
        assert!(resolve_chart(&names, "t").is_err());
    }
}
