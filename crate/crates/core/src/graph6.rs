//! graph6 encoding (McKay's format) for simple graphs.

use crate::bitset::CAPACITY;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let (body, base) = match s.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (s.as_bytes(), 0),
    };
    let err = |offset: usize, msg: &str| Error::Parse { offset: base + offset, msg: msg.to_string() };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside graph6 range"));
        }
    }
    let first = *body.first().ok_or_else(|| err(0, "empty input"))?;
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(err(body.len(), "truncated vertex count"));
        }
        if body[1] == 126 {
            return Err(err(1, "vertex counts above 258047 are not supported"));
        }
        let n = body[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > CAPACITY {
        return Err(err(0, &format!("{n} vertices exceeds capacity {CAPACITY}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(pos + need.min(body.len() - pos), &format!("expected {need} data bytes")));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = body[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference encoder written straight from the format description:
    /// build the full bit string, pad, then cut into sextets.
    fn oracle(g: &Graph) -> String {
        let n = g.order();
        let mut bytes: Vec<u8> = vec![];
        if n <= 62 {
            bytes.push(n as u8 + 63);
        } else {
            bytes.extend([126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
        }
        let mut bits: Vec<bool> = vec![];
        for j in 0..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j));
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push(false);
        }
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b as u8);
            bytes.push(v + 63);
        }
        String::from_utf8(bytes).unwrap()
    }

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::new(1)), "@");
        assert_eq!(encode(&Graph::path(2)), "A_");
        assert_eq!(oracle(&Graph::complete(4)), "C~");
        assert_eq!(oracle(&Graph::new(1)), "@");
        assert_eq!(oracle(&Graph::path(2)), "A_");
    }

    #[test]
    fn matches_oracle_and_round_trips() {
        for g in [Graph::cycle(7), Graph::k23_plus(), Graph::star(9), Graph::path(70), Graph::complete(63)] {
            let s = encode(&g);
            assert_eq!(s, oracle(&g));
            assert_eq!(decode(&s).unwrap(), g);
        }
        assert_eq!(decode(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("C"), Err(Error::Parse { .. })));
        assert!(matches!(decode("C~~"), Err(Error::Parse { .. })));
        assert!(matches!(decode("C~ "), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("A`"), Err(Error::Parse { offset: 1, .. })));
    }
}
