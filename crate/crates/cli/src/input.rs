//! Parsing of permutation arguments.

use bruhat_core::{FiniteSupportPermutation, PatternPermutation};
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawPermutation {
    Window { window: Vec<usize> },
    Pattern { prefix: Vec<usize>, period: usize, offsets: Vec<i64> },
}

/// Parses a name, an inline window, a JSON object, or `@path`.
///
/// Syntax problems are [`CliError::Parse`]; well-formed input breaking a
/// representation invariant is [`CliError::Invalid`].
pub fn parse_permutation(arg: &str) -> Result<PatternPermutation, CliError> {
    let text = arg.trim();
    if let Some(path) = text.strip_prefix('@') {
        let content = std::fs::read_to_string(path).map_err(|e| CliError::Parse {
            input: arg.to_string(),
            message: format!("cannot read {path}: {e}"),
        })?;
        return parse_json(arg, content.trim());
    }
    match text.to_ascii_lowercase().as_str() {
        "theta" => return Ok(PatternPermutation::theta()),
        "rho" => return Ok(PatternPermutation::rho()),
        "identity" | "id" | "e" => return Ok(PatternPermutation::identity()),
        _ => {}
    }
    if text.starts_with('{') {
        return parse_json(arg, text);
    }
    parse_window(arg, text)
}

fn parse_json(arg: &str, text: &str) -> Result<PatternPermutation, CliError> {
    let raw: RawPermutation = serde_json::from_str(text).map_err(|e| CliError::Parse {
        input: arg.to_string(),
        message: format!(
            "expected {{\"window\":[…]}} or {{\"prefix\":[…],\"period\":p,\"offsets\":[…]}} ({e})"
        ),
    })?;
    let perm = match raw {
        RawPermutation::Window { window } => PatternPermutation::from(&FiniteSupportPermutation::new(window)?),
        RawPermutation::Pattern {
            prefix,
            period,
            offsets,
        } => PatternPermutation::new(prefix, period, offsets)?,
    };
    Ok(perm)
}

fn parse_window(arg: &str, text: &str) -> Result<PatternPermutation, CliError> {
    let inner = text.strip_prefix('[').unwrap_or(text);
    let inner = inner.strip_suffix(']').unwrap_or(inner);
    let mut window = Vec::new();
    for (i, token) in inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let value = token.parse::<usize>().map_err(|_| CliError::Parse {
            input: arg.to_string(),
            message: format!("entry {} ({token:?}) is not a positive integer", i + 1),
        })?;
        window.push(value);
    }
    Ok(PatternPermutation::from(&FiniteSupportPermutation::new(window)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let rho = PatternPermutation::rho();
        assert_eq!(parse_permutation("rho").unwrap(), rho);
        assert_eq!(parse_permutation(r#"{"prefix":[3,1],"period":2,"offsets":[-2,2]}"#).unwrap(), rho);
        let w = PatternPermutation::from_window(vec![2, 1]).unwrap();
        assert_eq!(parse_permutation("[2,1]").unwrap(), w);
        assert_eq!(parse_permutation("2 1 3").unwrap(), w);
        assert_eq!(parse_permutation(r#"{"window":[2,1,3]}"#).unwrap(), w);
        assert_eq!(parse_permutation("[]").unwrap(), PatternPermutation::identity());
    }

    #[test]
    fn errors_name_the_problem() {
        let err = parse_permutation("[2,x,1]").unwrap_err();
        assert!(err.to_string().contains("entry 2"), "{err}");
        let err = parse_permutation("[2,2]").unwrap_err();
        assert!(matches!(err, CliError::Invalid(_)));
        let err = parse_permutation(r#"{"prefix":[],"period":1,"offsets":[2]}"#).unwrap_err();
        assert!(err.to_string().contains("offset sum nonzero"), "{err}");
        let err = parse_permutation(r#"{"prefix":[1"#).unwrap_err();
        assert!(err.to_string().contains("column"), "{err}");
    }
}
