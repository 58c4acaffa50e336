//! Plain-text graph format: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and everything after `#` are ignored.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct GraphParseError {
    pub line: usize,
    pub message: String,
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::empty(0);
    let mut edges_read = 0;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| GraphParseError { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two integers, found {} fields", fields.len())));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("`{s}` is not a non-negative integer")));
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => {
                header = Some((a, b));
                g = Graph::empty(a);
            }
            Some((_, m)) => {
                if edges_read == m {
                    return Err(err(format!("more than the declared {m} edges")));
                }
                match g.add_edge(a, b) {
                    Ok(true) => edges_read += 1,
                    Ok(false) => return Err(err(format!("duplicate edge {a} {b}"))),
                    Err(e) => return Err(err(e.to_string())),
                }
            }
        }
    }
    match header {
        None => Err(GraphParseError { line: last_line.max(1), message: "missing `n m` header".into() }),
        Some((_, m)) if edges_read < m => Err(GraphParseError {
            line: last_line.max(1),
            message: format!("declared {m} edges but found {edges_read}"),
        }),
        Some(_) => Ok(g),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::generators::petersen;

    #[test]
    fn round_trip() {
        let g = petersen();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_graph("# triangle\n3 3\n0 1\n1 2 # last two\n\n2 0\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(parse_graph("2 1\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("2 1\n0 0\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3 2\n0 1\n").unwrap_err().message, "declared 2 edges but found 1");
        assert_eq!(parse_graph("3 1\n0 1\n1 2\n").unwrap_err().line, 3);
        assert!(parse_graph("").is_err());
    }
}
