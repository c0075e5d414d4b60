//! graph6 wire format: printable-ASCII encoding of simple undirected graphs.
//!
//! Layout: a size field (byte `63 + n` for `n <= 62`, or `126` followed by
//! three bytes holding an 18-bit big-endian count), then
//! `ceil(n(n-1)/2 / 6)` payload bytes. Each payload byte minus 63 yields six
//! bits, most significant first, filling the upper triangle column by
//! column: x(0,1); x(0,2), x(1,2); x(0,3), ... with zero padding at the end.
//! An optional `>>graph6<<` header is accepted and stripped.

use domprism_core::graph::{make_graph, Graph, MAX_VERTICES};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const ENCODE_MAX: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 token")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    BadByte { pos: usize, byte: u8 },
    #[error("truncated bit payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} payload bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("order {n} exceeds capacity {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("graph6 token encodes an empty graph (n = 0)")]
    ZeroOrder,
    #[error("encoding supports at most {ENCODE_MAX} vertices, got {n}")]
    EncodeTooLarge { n: usize },
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 token into a graph.
pub fn parse_graph6(token: &str) -> Result<Graph, Graph6Error> {
    let token = token.strip_prefix(HEADER).unwrap_or(token).trim_end_matches(['\r', '\n']);
    let bytes = token.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { pos, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n >= 2^18, far beyond capacity
            return Err(Graph6Error::TooLarge { n: 1 << 18 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }
    let expected = payload_len(n);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: payload.len() });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = payload[bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
            if bit_index == n * (n - 1) / 2 {
                break 'outer;
            }
        }
    }
    Ok(make_graph(n, &edges).expect("decoded edges are in range and loop-free"))
}

/// Encodes a graph as a graph6 token with zero padding. Limited to 62
/// vertices (single-byte size field), which covers every corpus this tool
/// scans.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > ENCODE_MAX {
        return Err(Graph6Error::EncodeTooLarge { n });
    }
    let mut out = vec![63 + n as u8];
    let mut current = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            current <<= 1;
            current |= u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// One line of a graph6 stream.
#[derive(Debug, Clone)]
pub struct Graph6Record {
    /// 1-based position in the input.
    pub line_number: usize,
    pub text: String,
    pub graph: Graph,
}

#[derive(Debug, Error)]
#[error("line {line_number}: {source} ({text:?})")]
pub struct StreamError {
    pub line_number: usize,
    pub text: String,
    #[source]
    pub source: Graph6Error,
}

/// Parses a whole stream of graph6 lines, skipping blank lines. The first
/// bad line aborts the parse.
pub fn parse_stream(input: &str) -> Result<Vec<Graph6Record>, StreamError> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_number = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match parse_graph6(trimmed) {
            Ok(graph) => records.push(Graph6Record {
                line_number,
                text: trimmed.strip_prefix(HEADER).unwrap_or(trimmed).to_string(),
                graph,
            }),
            Err(source) => {
                return Err(StreamError { line_number, text: trimmed.to_string(), source })
            }
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use domprism_core::{complete, cycle, hypercube, path};

    // reference tokens produced by an independent encoder (networkx)
    const REFERENCE: &[(&str, &str)] = &[
        ("K1", "@"),
        ("K2", "A_"),
        ("K3", "Bw"),
        ("K4", "C~"),
        ("P3", "Bg"),
        ("P5", "DhC"),
        ("C4", "Cl"),
        ("C5", "Dhc"),
        ("C7", "FhCKG"),
        ("Q3", "Gr`HOk"),
    ];

    fn reference_graph(name: &str) -> Graph {
        let (kind, n) = name.split_at(1);
        let n: usize = n.parse().unwrap();
        match kind {
            "K" => complete(n).unwrap(),
            "P" => path(n).unwrap(),
            "C" => cycle(n).unwrap(),
            "Q" => hypercube(n).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn encodes_reference_tokens() {
        for (name, token) in REFERENCE {
            assert_eq!(encode_graph6(&reference_graph(name)).unwrap(), *token, "{name}");
        }
    }

    #[test]
    fn parses_reference_tokens() {
        for (name, token) in REFERENCE {
            assert_eq!(parse_graph6(token).unwrap(), reference_graph(name), "{name}");
        }
    }

    #[test]
    fn header_prefix_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn k1_has_empty_payload() {
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(encode_graph6(&parse_graph6("@").unwrap()).unwrap(), "@");
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("A "), Err(Graph6Error::BadByte { pos: 1, byte: 0x20 })));
        assert!(matches!(parse_graph6("D"), Err(Graph6Error::Truncated { expected: 2, found: 0 })));
        assert!(matches!(parse_graph6("A__"), Err(Graph6Error::TrailingData { .. })));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroOrder));
        // long form: n = 5000 > capacity
        let tok: String = [126u8, 63 + 1, 63 + 14, 63 + 8].iter().map(|&b| b as char).collect();
        assert!(matches!(parse_graph6(&tok), Err(Graph6Error::TooLarge { n: 5000 })));
    }

    #[test]
    fn long_form_size_field_parses() {
        // n = 63 (just past the single-byte range): header 126, then 63 in
        // three 6-bit chunks
        let n = 63usize;
        let mut token = String::new();
        token.push(126 as char);
        token.push((63 + ((n >> 12) & 63)) as u8 as char);
        token.push((63 + ((n >> 6) & 63)) as u8 as char);
        token.push((63 + (n & 63)) as u8 as char);
        for _ in 0..payload_len(n) {
            token.push('?'); // all-zero payload
        }
        let g = parse_graph6(&token).unwrap();
        assert_eq!(g.order(), 63);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn encode_rejects_beyond_62() {
        let q6 = hypercube(6).unwrap();
        assert!(matches!(encode_graph6(&q6), Err(Graph6Error::EncodeTooLarge { n: 64 })));
    }

    #[test]
    fn round_trip_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x67726170683621);
        for _ in 0..300 {
            let n = rng.gen_range(1..=20);
            let mut edges = Vec::new();
            let p: f64 = rng.gen_range(0.0..1.0);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = make_graph(n, &edges).unwrap();
            let token = encode_graph6(&g).unwrap();
            let back = parse_graph6(&token).unwrap();
            assert_eq!(g, back);
            // parse . encode is the identity on tokens as well
            assert_eq!(encode_graph6(&back).unwrap(), token);
        }
    }

    #[test]
    fn nonzero_padding_normalizes_on_reencode() {
        // K_2 token with a junk padding bit set: decode ignores the padding,
        // re-encode zeroes it
        let dirty = format!("A{}", (63 + 0b100001u8) as char);
        let g = parse_graph6(&dirty).unwrap();
        assert_eq!(g, complete(2).unwrap());
        assert_eq!(encode_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn stream_parsing_reports_line_numbers() {
        let records = parse_stream("A_\n\nBw\n").unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].line_number, 1);
        assert_eq!(records[1].line_number, 3);
        assert_eq!(records[1].text, "Bw");

        let err = parse_stream("A_\nnot-a-token!\n").unwrap_err();
        assert_eq!(err.line_number, 2);
    }
}
