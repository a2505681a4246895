//! Parsers for the textual argument formats shared by the subcommands.

use greenkern_core::renorm::{log_radii, BasisTerm};
use greenkern_core::Complex64;

fn number(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let v: f64 = t.parse().map_err(|_| format!("not a number: {t:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not a finite number: {t:?}"))
    }
}

/// Comma-separated finite reals.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Err("empty list".into());
    }
    s.split(',').map(number).collect()
}

/// `re` or `re,im`.
pub fn parse_zeta(s: &str) -> Result<Complex64, String> {
    match parse_list(s)?.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err(format!("expected re[,im], got {s:?}")),
    }
}

/// Point coordinates, one to four of them.
pub fn parse_point(s: &str) -> Result<Vec<f64>, String> {
    let v = parse_list(s)?;
    if v.len() > 4 {
        return Err(format!("at most four coordinates, got {}", v.len()));
    }
    Ok(v)
}

/// Either `hi:lo:n` for `n` log-spaced radii or an explicit comma list,
/// returned in decreasing order.
pub fn parse_radii(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let mut radii = match parts.as_slice() {
        [hi, lo, n] => {
            let n: usize = n.trim().parse().map_err(|_| format!("bad radius count {n:?}"))?;
            log_radii(number(hi)?, number(lo)?, n).map_err(|e| e.to_string())?
        }
        [list] => parse_list(list)?,
        _ => return Err(format!("expected hi:lo:n or a comma list, got {s:?}")),
    };
    if radii.iter().any(|r| *r <= 0.0) {
        return Err("radii must be positive".into());
    }
    radii.sort_by(|a, b| b.total_cmp(a));
    Ok(radii)
}

/// Comma-separated basis names such as `inv1,log,const`.
pub fn parse_basis(s: &str) -> Result<Vec<BasisTerm>, String> {
    s.split(',')
        .map(|name| {
            BasisTerm::from_name(name.trim()).ok_or_else(|| {
                let known: Vec<&str> = BasisTerm::ALL.iter().map(|t| t.name()).collect();
                format!("unknown basis term {name:?} (known: {})", known.join(", "))
            })
        })
        .collect()
}

/// `lo,hi`.
pub fn parse_window(s: &str) -> Result<(f64, f64), String> {
    match parse_list(s)?.as_slice() {
        [lo, hi] if lo < hi => Ok((*lo, *hi)),
        _ => Err(format!("expected lo,hi with lo < hi, got {s:?}")),
    }
}
