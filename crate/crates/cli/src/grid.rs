/// Parse `a:b:n` (linear), `log:a:b:n` (logarithmic), a comma list, or a single value.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let s = s.trim();
    let (log, body) = match s.strip_prefix("log:") {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("'{t}' is not a number in grid '{s}'"));
    if body.contains(':') {
        let parts: Vec<&str> = body.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{s}' must look like a:b:n"));
        }
        let (a, b) = (num(parts[0])?, num(parts[1])?);
        let n: usize =
            parts[2].trim().parse().map_err(|_| format!("grid '{s}': point count must be a positive integer"))?;
        if n == 0 || !(a.is_finite() && b.is_finite()) {
            return Err(format!("grid '{s}' needs finite ends and n ≥ 1"));
        }
        if n == 1 {
            return Ok(vec![a]);
        }
        if log {
            if !(a > 0.0 && b > 0.0) {
                return Err(format!("log grid '{s}' needs positive ends"));
            }
            let (la, lb) = (a.ln(), b.ln());
            return Ok((0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect());
        }
        return Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect());
    }
    if log {
        return Err(format!("log grid '{s}' must look like log:a:b:n"));
    }
    body.split(',').map(num).collect()
}
