//! Parsing of raw values, range specs, and input files into u64 lists.

const U64_DOMAIN_END: f64 = 18446744073709551616.0; // 2^64

/// Parses one token into a u64, classifying rejections so the error can
/// name the token and the reason.
pub fn parse_token(token: &str) -> Result<u64, String> {
    let trimmed = token.trim();
    if let Ok(value) = trimmed.parse::<u64>() {
        return Ok(value);
    }
    // Tokens like "2.5", "-7" or "1e5" miss the integer parse; classify
    // them through f64. Anything integral and in range is still accepted.
    let reason = match trimmed.parse::<f64>() {
        Ok(v) if v.is_nan() => "not a number",
        Ok(v) if v < 0.0 => "negative value",
        Ok(v) if v >= U64_DOMAIN_END => "exceeds the 64-bit range",
        Ok(v) if v.fract() != 0.0 => "not an integer",
        Ok(v) => return Ok(v as u64),
        Err(_) => "not a number",
    };
    Err(format!("invalid input '{trimmed}': {reason}"))
}

/// Expands `A:B` or `A:B:STEP` into the inclusive sequence A, A+STEP, ... B.
pub fn parse_range(spec: &str) -> Result<Vec<u64>, String> {
    let malformed =
        || format!("malformed range '{spec}': expected A:B or A:B:STEP with unsigned integers");
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(malformed());
    }
    let start: u64 = parts[0].trim().parse().map_err(|_| malformed())?;
    let end: u64 = parts[1].trim().parse().map_err(|_| malformed())?;
    let step: u64 = match parts.get(2) {
        Some(text) => text.trim().parse().map_err(|_| malformed())?,
        None => 1,
    };
    if step == 0 {
        return Err(format!("malformed range '{spec}': step must be at least 1"));
    }
    let mut values = Vec::new();
    let mut current = start;
    while current <= end {
        values.push(current);
        match current.checked_add(step) {
            Some(next) => current = next,
            None => break,
        }
    }
    Ok(values)
}

/// Yields one token per non-empty line; `#` starts a comment.
pub fn file_tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    })
}
