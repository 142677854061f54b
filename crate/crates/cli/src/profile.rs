//! Tolerance profiles: a TOML file with any subset of the [`Tolerances`]
//! fields, then `key=value` overrides from the command line.
//!
//! ```toml
//! rank_rel = 1e-10
//! trace_cmp = 1e-8
//! ```

use serde::Deserialize;
use subiso_core::Tolerances;

use crate::error::{CliError, CliResult};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Profile {
    rank_rel: Option<f64>,
    orth: Option<f64>,
    sv_distinct: Option<f64>,
    lex_quantum: Option<f64>,
    trace_cmp: Option<f64>,
}

const KEYS: [&str; 5] = ["rank_rel", "orth", "sv_distinct", "lex_quantum", "trace_cmp"];

fn slot<'a>(tol: &'a mut Tolerances, key: &str) -> Option<&'a mut f64> {
    match key {
        "rank_rel" => Some(&mut tol.rank_rel),
        "orth" => Some(&mut tol.orth),
        "sv_distinct" => Some(&mut tol.sv_distinct),
        "lex_quantum" => Some(&mut tol.lex_quantum),
        "trace_cmp" => Some(&mut tol.trace_cmp),
        _ => None,
    }
}

/// Defaults, overlaid with the profile text (if any), then the overrides.
pub fn resolve(profile: Option<&str>, overrides: &[String]) -> CliResult<Tolerances> {
    let mut tol = Tolerances::default();
    if let Some(text) = profile {
        let p: Profile = toml::from_str(text).map_err(|e| CliError::Profile(e.message().to_string()))?;
        let values = [p.rank_rel, p.orth, p.sv_distinct, p.lex_quantum, p.trace_cmp];
        for (key, v) in KEYS.iter().zip(values) {
            if let Some(v) = v {
                *slot(&mut tol, key).expect("known key") = v;
            }
        }
    }
    for o in overrides {
        let (k, v) = o.split_once('=').ok_or_else(|| CliError::Profile(format!("override `{o}` is not key=value")))?;
        let target = slot(&mut tol, k.trim())
            .ok_or_else(|| CliError::Profile(format!("unknown tolerance `{k}` (known: {})", KEYS.join(", "))))?;
        *target = v.trim().parse().map_err(|_| CliError::Profile(format!("`{v}` is not a number")))?;
    }
    if !tol.is_valid() {
        return Err(CliError::Profile(
            "tolerances must be positive and finite, with lex_quantum well above machine precision".into(),
        ));
    }
    Ok(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layering() {
        let tol = resolve(Some("rank_rel = 1e-10\ntrace_cmp = 1e-6\n"), &["trace_cmp=1e-5".into()]).unwrap();
        assert_eq!(tol.rank_rel, 1e-10);
        assert_eq!(tol.trace_cmp, 1e-5);
        assert_eq!(tol.orth, Tolerances::default().orth);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(resolve(Some("rank_rel = \"x\""), &[]).is_err());
        assert!(resolve(Some("unknown = 1.0"), &[]).is_err());
        assert!(resolve(None, &["orth".into()]).is_err());
        assert!(resolve(None, &["nope=1".into()]).is_err());
        assert!(resolve(None, &["orth=-1".into()]).is_err());
        assert!(resolve(None, &["lex_quantum=1e-20".into()]).is_err());
    }

    #[test]
    fn defaults_without_input() {
        assert_eq!(resolve(None, &[]).unwrap(), Tolerances::default());
    }
}
