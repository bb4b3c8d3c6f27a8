use std::io::Read;
use std::path::Path;

use serde_json::Value;

use tlink::linkdiag::GaussCode;
use tlink::{Error, LinkDiagram, Result};

/// File contents, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    Ok(std::fs::read_to_string(path)?)
}

/// A diagram as PD JSON (`crossings`), signed Gauss JSON (`gauss`), or any
/// object carrying one of those under `diagram` (catalogue entries, jobs).
pub fn read_diagram(path: &Path) -> Result<LinkDiagram> {
    let value: Value = serde_json::from_str(&read_text(path)?)?;
    parse_diagram(value)
}

fn parse_diagram(value: Value) -> Result<LinkDiagram> {
    if value.get("crossings").is_some() {
        return Ok(serde_json::from_value(value)?);
    }
    if value.get("gauss").is_some() {
        let code: GaussCode = serde_json::from_value(value)?;
        return LinkDiagram::from_gauss(&code);
    }
    match value {
        Value::Object(mut o) if o.contains_key("diagram") => parse_diagram(o.remove("diagram").unwrap_or_default()),
        _ => Err(Error::InvalidDiagram(
            "expected an object with `crossings`, `gauss` or `diagram`".into(),
        )),
    }
}
