//! Text format for half-edge graphs.
//!
//! One `vertex` line per vertex listing its half-edge ids, one `pair`
//! line per internal edge; all remaining half-edges are legs. `#`
//! starts a comment.
//!
//! ```text
//! vertex 0 1 2
//! vertex 3 4 5
//! pair 2 3
//! ```

use std::fmt;

use gvcalc_core::graphs::{build_graph, GraphError, HalfEdgeGraph};

#[derive(Debug)]
pub enum GraphFileError {
    Grammar { line: usize, message: String },
    Graph(GraphError),
}

impl fmt::Display for GraphFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFileError::Grammar { line, message } => write!(f, "line {}: {}", line, message),
            GraphFileError::Graph(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for GraphFileError {}

pub fn parse_graph(text: &str) -> Result<HalfEdgeGraph, GraphFileError> {
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = full_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let key = parts.next().expect("nonempty");
        let nums: Result<Vec<usize>, _> = parts.map(|p| p.parse::<usize>()).collect();
        let nums = nums.map_err(|_| GraphFileError::Grammar {
            line: line_no,
            message: "expected integer half-edge ids".into(),
        })?;
        match key {
            "vertex" => vertices.push(nums),
            "pair" => {
                if nums.len() != 2 {
                    return Err(GraphFileError::Grammar {
                        line: line_no,
                        message: "pair takes exactly two half-edge ids".into(),
                    });
                }
                pairs.push((nums[0], nums[1]));
            }
            other => {
                return Err(GraphFileError::Grammar {
                    line: line_no,
                    message: format!("unknown key `{}`", other),
                })
            }
        }
    }
    let refs: Vec<&[usize]> = vertices.iter().map(|v| v.as_slice()).collect();
    build_graph(&refs, &pairs).map_err(GraphFileError::Graph)
}

pub fn graph_to_text(g: &HalfEdgeGraph) -> String {
    let mut out = String::new();
    for v in 0..g.n_vertices() {
        out.push_str("vertex");
        for h in g.half_edges_at(v) {
            out.push_str(&format!(" {}", h));
        }
        out.push('\n');
    }
    for (a, b) in g.internal_edges() {
        out.push_str(&format!("pair {} {}\n", a, b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "vertex 0 1 2\nvertex 3 4 5\npair 2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.legs().len(), 4);
        assert_eq!(g.loop_count(), 0);
        let back = parse_graph(&graph_to_text(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph("vertex 0 0\n").is_err());
        assert!(parse_graph("pair 0\nvertex 0 1\n").is_err());
        assert!(parse_graph("nonsense\n").is_err());
    }
}
