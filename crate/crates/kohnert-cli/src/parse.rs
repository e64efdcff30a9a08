use kohnert::{Polynomial, Tableau, WeakComposition};
use serde_json::Value;

use crate::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::BadInput(msg.into())
}

/// Comma-separated nonnegative integers, right-padded with zeros to `n` if given.
pub fn composition(s: &str, n: Option<usize>) -> Result<WeakComposition, CliError> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut parts = Vec::new();
    if !s.is_empty() {
        for tok in s.split(',') {
            let p: u32 = tok.trim().parse().map_err(|_| bad(format!("not a nonnegative integer: {tok:?}")))?;
            parts.push(p);
        }
    }
    if let Some(n) = n {
        if n < parts.len() {
            return Err(bad(format!("composition has {} parts but --n is {n}", parts.len())));
        }
        parts.resize(n, 0);
    }
    if parts.is_empty() {
        return Err(bad("empty composition"));
    }
    Ok(WeakComposition::new(parts))
}

/// A tableau written row by row, top row first: `"1,1,2/3,3"`.
pub fn tableau(s: &str) -> Result<Tableau, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Tableau::empty());
    }
    let rows = s
        .split('/')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad(format!("bad tableau entry {t:?}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tableau::new(rows)?)
}

/// Polynomial JSON: `[{"coeff": c, "exp": [..]}, ...]`.
pub fn polynomial_json(s: &str, n: Option<usize>) -> Result<Polynomial, CliError> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let terms = v.as_array().ok_or_else(|| bad("polynomial JSON must be an array"))?;
    let mut p = Polynomial::zero(n.unwrap_or(0));
    for t in terms {
        let coeff = t.get("coeff").and_then(Value::as_i64).ok_or_else(|| bad("term lacks integer coeff"))?;
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term lacks exp array"))?
            .iter()
            .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad("bad exponent")))
            .collect::<Result<Vec<u32>, _>>()?;
        p.add_monomial(exp, coeff)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions() {
        assert_eq!(composition("0,3,2", None).unwrap().parts(), &[0, 3, 2]);
        assert_eq!(composition("3", Some(3)).unwrap().parts(), &[3, 0, 0]);
        assert!(composition("1,-2", None).is_err());
        assert!(composition("1,2,3", Some(2)).is_err());
        assert!(composition("", None).is_err());
    }

    #[test]
    fn tableaux() {
        let t = tableau("1,1,2/3,3").unwrap();
        assert_eq!(t.shape(), vec![3, 2]);
        assert!(tableau("1,2/1").is_err());
    }

    #[test]
    fn polynomials() {
        let p = polynomial_json(r#"[{"coeff":2,"exp":[1,0]},{"coeff":-1,"exp":[0,1]}]"#, None).unwrap();
        assert_eq!(p.to_text(), "2*x1 - x2");
        assert!(polynomial_json("{}", None).is_err());
    }
}
