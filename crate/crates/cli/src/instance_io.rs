//! The flat instance file format.
//!
//! A header line `n k m`, then m lines of k space-separated 0-based vertex
//! ids. Lines starting with `#` are ignored, trailing whitespace is
//! tolerated. Serialization emits the canonical (sorted) edge order, so
//! parse -> serialize -> parse is a fixed point.

use std::fmt;

use grdisc_core::{Error as CoreError, UniformHypergraph};

#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, message: String },
    Core(CoreError),
    Io(std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    /// 2 for usage/parse problems, 3 for resource limits (instance caps,
    /// memory budget, integer width).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoreError::InstanceTooLarge { .. }
                | CoreError::MemoryBudgetExceeded { .. }
                | CoreError::Overflow,
            ) => 3,
            _ => 2,
        }
    }
}

pub fn parse_instance(text: &str) -> Result<UniformHypergraph, CliError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("header must be `n k m`, got {:?}", line),
                    });
                }
                let mut vals = [0usize; 3];
                for (slot, field) in vals.iter_mut().zip(&fields) {
                    *slot = field.parse().map_err(|_| CliError::Parse {
                        line: line_no,
                        message: format!("`{field}` is not a count"),
                    })?;
                }
                header = Some((vals[0], vals[1], vals[2]));
            }
            Some((_, k, m)) => {
                if edges.len() == m {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("more than the declared {m} edge lines"),
                    });
                }
                if fields.len() != k {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("expected {k} vertex ids, got {}", fields.len()),
                    });
                }
                let mut edge = Vec::with_capacity(k);
                for field in &fields {
                    edge.push(field.parse().map_err(|_| CliError::Parse {
                        line: line_no,
                        message: format!("`{field}` is not a vertex id"),
                    })?);
                }
                edges.push(edge);
            }
        }
    }
    let (n, k, m) = header.ok_or(CliError::Parse {
        line: 0,
        message: "missing header line `n k m`".into(),
    })?;
    if edges.len() != m {
        return Err(CliError::Parse {
            line: 0,
            message: format!("header declares {m} edges, file has {}", edges.len()),
        });
    }
    Ok(UniformHypergraph::new(n, k, edges)?)
}

/// Canonical serialization; any `comments` are emitted first as `#` lines.
pub fn serialize_instance(h: &UniformHypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!(
        "{} {} {}\n",
        h.vertex_count(),
        h.uniformity(),
        h.edge_count()
    ));
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Parses an ordering file: n whitespace-separated vertex ids, `#` comments
/// ignored.
pub fn parse_ordering(text: &str) -> Result<Vec<u32>, CliError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for field in line.split_whitespace() {
            out.push(field.parse().map_err(|_| CliError::Parse {
                line: idx + 1,
                message: format!("`{field}` is not a vertex id"),
            })?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_fixed_point() {
        let text = "# a comment\n3 2 2\n1 0\n1 2   \n";
        let h = parse_instance(text).unwrap();
        let canon = serialize_instance(&h, &[]);
        assert_eq!(canon, "3 2 2\n0 1\n1 2\n");
        let h2 = parse_instance(&canon).unwrap();
        assert_eq!(h, h2);
        assert_eq!(serialize_instance(&h2, &[]), canon);
    }

    #[test]
    fn header_errors() {
        assert!(matches!(
            parse_instance("3 2\n"),
            Err(CliError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance(""),
            Err(CliError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_instance("3 2 2\n0 1\n"),
            Err(CliError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_instance("3 2 1\n0 1\n1 2\n"),
            Err(CliError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_instance("2 2 1\n0 1 2\n"),
            Err(CliError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn core_validation_propagates() {
        let err = parse_instance("2 2 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, CliError::Core(CoreError::DuplicateEdge { .. })));
    }

    #[test]
    fn ordering_file() {
        assert_eq!(parse_ordering("2 0 1\n").unwrap(), vec![2, 0, 1]);
        assert_eq!(parse_ordering("# hi\n2\n0\n1\n").unwrap(), vec![2, 0, 1]);
        assert!(parse_ordering("2 x\n").is_err());
    }
}
