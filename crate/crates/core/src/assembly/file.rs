//! Line-oriented pattern files.
//!
//! ```text
//! # two top classes of Γ_{1,3} glued along one edge
//! vertex a rank=1 leaves=3 degree=2
//! vertex b rank=1 leaves=3 degree=2 module=(1^3)
//! glue a.1 b.1
//! ```
//!
//! `#` starts a comment. A `vertex` line takes `rank=`, `leaves=` and
//! `degree=` in any order, then optionally `module=` which must come last
//! and runs to the end of the line (a module sum, or `unknown`). Without it
//! the module is the closed form when `rank ≤ 2` and unknown otherwise.
//! `glue` takes two `<id>.<leaf>` references with 1-based leaves; ids may be
//! declared after they are used. Ids may not contain `.`, `=` or `#`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::Module;

use super::pattern::{ClassModule, GluingPattern, LeafRef, Vertex};

fn line_error(line: usize, message: impl Into<String>) -> Error {
    Error::PatternFile {
        line,
        message: message.into(),
    }
}

pub fn parse_pattern(text: &str) -> Result<GluingPattern> {
    let mut pattern = GluingPattern::new();
    let mut glue_lines = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "vertex" => {
                let vertex = parse_vertex(rest.trim(), line_no)?;
                if pattern.vertex_index(&vertex.id).is_some() {
                    return Err(line_error(line_no, format!("duplicate vertex id '{}'", vertex.id)));
                }
                pattern.add_vertex(vertex);
            }
            "glue" => glue_lines.push((line_no, rest.trim().to_string())),
            other => return Err(line_error(line_no, format!("unknown directive '{other}'"))),
        }
    }
    for (line_no, rest) in glue_lines {
        let refs: Vec<&str> = rest.split_whitespace().collect();
        if refs.len() != 2 {
            return Err(line_error(line_no, "glue takes exactly two leaf references"));
        }
        let a = leaf_ref(&pattern, refs[0], line_no)?;
        let b = leaf_ref(&pattern, refs[1], line_no)?;
        pattern.glue(a, b);
    }
    Ok(pattern)
}

fn parse_vertex(rest: &str, line_no: usize) -> Result<Vertex> {
    let (id, mut fields) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    check_id(id, line_no)?;
    let mut values: HashMap<&str, usize> = HashMap::new();
    let mut module_text = None;
    loop {
        fields = fields.trim_start();
        if fields.is_empty() {
            break;
        }
        if let Some(text) = fields.strip_prefix("module=") {
            module_text = Some(text.trim());
            break;
        }
        let (token, tail) = fields.split_once(char::is_whitespace).unwrap_or((fields, ""));
        fields = tail;
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| line_error(line_no, format!("expected key=value, found '{token}'")))?;
        if !matches!(key, "rank" | "leaves" | "degree") {
            return Err(line_error(line_no, format!("unknown key '{key}'")));
        }
        let value: usize = value
            .parse()
            .map_err(|_| line_error(line_no, format!("'{value}' is not a non-negative integer")))?;
        if values.insert(key, value).is_some() {
            return Err(line_error(line_no, format!("key '{key}' given twice")));
        }
    }
    let get = |key: &str| {
        values
            .get(key)
            .copied()
            .ok_or_else(|| line_error(line_no, format!("missing key '{key}'")))
    };
    let leaves = get("leaves")?;
    let module = match module_text {
        None => ClassModule::Auto,
        Some("unknown") => ClassModule::Unknown,
        Some(text) => ClassModule::Explicit(
            Module::parse(text, leaves).map_err(|e| line_error(line_no, e.to_string()))?,
        ),
    };
    Ok(Vertex {
        id: id.to_string(),
        rank: get("rank")?,
        leaves,
        degree: get("degree")?,
        module,
    })
}

fn check_id(id: &str, line_no: usize) -> Result<()> {
    if id.is_empty() || id.contains(['.', '=']) {
        return Err(line_error(line_no, format!("invalid vertex id '{id}'")));
    }
    Ok(())
}

fn leaf_ref(pattern: &GluingPattern, token: &str, line_no: usize) -> Result<LeafRef> {
    let (id, leaf) = token
        .rsplit_once('.')
        .ok_or_else(|| line_error(line_no, format!("expected <id>.<leaf>, found '{token}'")))?;
    let vertex = pattern
        .vertex_index(id)
        .ok_or_else(|| line_error(line_no, format!("unknown vertex '{id}'")))?;
    let leaf = leaf
        .parse()
        .map_err(|_| line_error(line_no, format!("'{leaf}' is not a leaf index")))?;
    Ok(LeafRef { vertex, leaf })
}

/// Writes a pattern in the file format; parsing the output gives it back.
pub fn format_pattern(pattern: &GluingPattern) -> String {
    let mut out = String::new();
    for v in pattern.vertices() {
        let _ = write!(out, "vertex {} rank={} leaves={} degree={}", v.id, v.rank, v.leaves, v.degree);
        match &v.module {
            ClassModule::Auto => {}
            ClassModule::Unknown => out.push_str(" module=unknown"),
            ClassModule::Explicit(m) => {
                let _ = write!(out, " module={m}");
            }
        }
        out.push('\n');
    }
    for p in pattern.pairings() {
        let ids = (&pattern.vertices()[p.0.vertex].id, &pattern.vertices()[p.1.vertex].id);
        let _ = writeln!(out, "glue {}.{} {}.{}", ids.0, p.0.leaf, ids.1, p.1.leaf);
    }
    out
}
