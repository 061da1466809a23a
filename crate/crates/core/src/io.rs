//! Line-oriented interchange: graph6, rooted-graph JSON lines, strategy JSON lines.

use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph6;
use crate::rooted::RootedGraph;
use crate::search::Move;

/// `{"g6": ..., "s_in": [...], "s_out": [...], "name": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedRecord {
    pub g6: String,
    #[serde(default)]
    pub s_in: Vec<usize>,
    #[serde(default)]
    pub s_out: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl RootedRecord {
    pub fn from_rooted(rg: &RootedGraph, name: Option<String>) -> Self {
        RootedRecord { g6: graph6::encode(&rg.graph), s_in: rg.s_in.to_vec(), s_out: rg.s_out.to_vec(), name }
    }

    pub fn to_rooted(&self) -> Result<RootedGraph> {
        let g = graph6::decode(&self.g6)?;
        let set = |v: &[usize]| -> Result<Bits> {
            v.iter().map(|&x| if x < g.order() { Ok(x) } else { Err(Error::NoSuchVertex(x)) }).collect()
        };
        let (s_in, s_out) = (set(&self.s_in)?, set(&self.s_out)?);
        RootedGraph::new(g, s_in, s_out)
    }
}

fn line_error(line: usize, e: impl std::fmt::Display) -> Error {
    Error::Invalid(format!("line {line}: {e}"))
}

/// A named rooted graph read from an input file.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: Option<String>,
    pub rooted: RootedGraph,
}

/// Parse graph6 lines or rooted-graph JSON lines; the format is chosen per line.
/// Plain graph6 lines yield `(G, ∅, ∅)`.
pub fn parse_entries(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let entry = if t.starts_with('{') {
            let rec: RootedRecord = serde_json::from_str(t).map_err(|e| line_error(i + 1, e))?;
            Entry { name: rec.name.clone(), rooted: rec.to_rooted().map_err(|e| line_error(i + 1, e))? }
        } else {
            let g = graph6::decode(t).map_err(|e| line_error(i + 1, e))?;
            Entry { name: None, rooted: RootedGraph::unrooted(g).map_err(|e| line_error(i + 1, e))? }
        };
        out.push(entry);
    }
    Ok(out)
}

pub fn write_entries(entries: &[Entry]) -> String {
    let mut s = String::new();
    for e in entries {
        let rec = RootedRecord::from_rooted(&e.rooted, e.name.clone());
        s.push_str(&serde_json::to_string(&rec).expect("serializable"));
        s.push('\n');
    }
    s
}

/// One move per line: `{"op":"p","v":0}`, `{"op":"s","v":0,"u":1}`.
pub fn parse_strategy(text: &str) -> Result<Vec<Move>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l.trim()).map_err(|e| line_error(i + 1, e)))
        .collect()
}

pub fn write_strategy(moves: &[Move]) -> String {
    moves.iter().map(|m| serde_json::to_string(m).expect("serializable") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn rooted_round_trip() {
        let rg = RootedGraph::new(Graph::cycle(5), Bits::singleton(0), Bits::singleton(2)).unwrap();
        let text = write_entries(&[Entry { name: Some("c5".into()), rooted: rg.clone() }]);
        let back = parse_entries(&text).unwrap();
        assert_eq!(back[0].rooted, rg);
        assert_eq!(back[0].name.as_deref(), Some("c5"));
    }

    #[test]
    fn mixed_lines_and_errors() {
        let e = parse_entries("C~\n\n{\"g6\":\"A_\",\"s_in\":[0]}\n").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[1].rooted.s_in, Bits::singleton(0));
        let err = parse_entries("C~\nC!\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert!(parse_entries("{\"g6\":\"A_\",\"s_in\":[5]}").is_err());
    }

    #[test]
    fn strategy_round_trip() {
        let moves = vec![Move::p(0), Move::s(0, 1), Move::r(1)];
        assert_eq!(parse_strategy(&write_strategy(&moves)).unwrap(), moves);
    }
}
