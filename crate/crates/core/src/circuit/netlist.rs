//! Plain-text netlist format.
//!
//! ```text
//! # mode cmos-reduced
//! # graph 1f0c9a...
//! # encoding 4 2 lsb-first
//! # lines 16
//! # segment workspace 0 8
//! # segment pair_result 8 4
//! # segment scratch 12 3
//! # segment flag 15 1
//! NOT 1
//! TOF 0 1 12
//! ...
//! ```
//!
//! Gates are `NOT t`, `CNOT c t`, `TOF c1 c2 t`, `MCN c1,...,cj t`, `RST t`
//! and `CRST c t`. Indices are decimal, fields separated by single spaces,
//! lines end with LF.

use std::fmt::Write as _;

use crate::circuit::{Circuit, Gate, LineLayout, Mode, Segment, SegmentKind};
use crate::encoding::Encoding;
use crate::error::{Error, Result};

pub fn emit_netlist(c: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# mode {}", c.mode);
    let _ = writeln!(out, "# graph {}", c.fingerprint);
    let _ = writeln!(out, "# encoding {} {} lsb-first", c.encoding.vertex_count(), c.encoding.bits_per_vertex());
    let _ = writeln!(out, "# lines {}", c.layout.total());
    for seg in c.layout.segments() {
        let _ = writeln!(out, "# segment {} {} {}", seg.kind, seg.start, seg.len);
    }
    for gate in &c.gates {
        let _ = writeln!(out, "{gate}");
    }
    out
}

pub fn parse_netlist(text: &str) -> Result<Circuit> {
    let mut mode = None;
    let mut fingerprint = None;
    let mut encoding = None;
    let mut total = None;
    let mut segments = Vec::new();
    let mut gates = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix("# ") {
            if !gates.is_empty() {
                return Err(err("header line after the first gate".into()));
            }
            let fields: Vec<&str> = header.split(' ').collect();
            match fields.as_slice() {
                ["mode", name] => mode = Some(name.parse::<Mode>().map_err(|e| err(e.to_string()))?),
                ["graph", fp] => fingerprint = Some(fp.to_string()),
                ["encoding", n, k, "lsb-first"] => {
                    let n = number(n, line_no)?;
                    let k = number(k, line_no)?;
                    let enc = Encoding::new(n).map_err(|e| err(e.to_string()))?;
                    if enc.bits_per_vertex() != k {
                        return Err(err(format!("{n} vertices need {} bits, header says {k}", enc.bits_per_vertex())));
                    }
                    encoding = Some(enc);
                }
                ["lines", t] => total = Some(number(t, line_no)?),
                ["segment", name, start, len] => segments.push(Segment {
                    kind: name.parse::<SegmentKind>().map_err(|e| err(e.to_string()))?,
                    start: number(start, line_no)?,
                    len: number(len, line_no)?,
                }),
                _ => return Err(err(format!("unrecognized header `{line}`"))),
            }
            continue;
        }
        gates.push(parse_gate(line, line_no)?);
    }

    let missing = |what: &str| Error::Parse { line: 1, message: format!("missing `# {what}` header") };
    let mode = mode.ok_or_else(|| missing("mode"))?;
    let encoding = encoding.ok_or_else(|| missing("encoding"))?;
    let total = total.ok_or_else(|| missing("lines"))?;
    let fingerprint = fingerprint.unwrap_or_default();
    let n = encoding.vertex_count();
    let arcs = segments.iter().find(|s| s.kind == SegmentKind::Hit).map_or(0, |s| s.len / n);
    let layout = LineLayout::from_segments(segments, total, arcs)?;
    Circuit::from_parts(mode, encoding, layout, gates, fingerprint)
}

fn number(tok: &str, line: usize) -> Result<usize> {
    // reject signs, leading zeros and other non-canonical spellings
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) || (tok.len() > 1 && tok.starts_with('0')) {
        return Err(Error::Parse { line, message: format!("expected a decimal index, found `{tok}`") });
    }
    tok.parse().map_err(|_| Error::Parse { line, message: format!("index `{tok}` too large") })
}

fn parse_gate(line: &str, line_no: usize) -> Result<Gate> {
    let fields: Vec<&str> = line.split(' ').collect();
    let n = |i: usize| number(fields[i], line_no);
    let gate = match (fields[0], fields.len()) {
        ("NOT", 2) => Gate::Not { target: n(1)? },
        ("CNOT", 3) => Gate::Cnot { control: n(1)?, target: n(2)? },
        ("TOF", 4) => Gate::Toffoli { controls: [n(1)?, n(2)?], target: n(3)? },
        ("MCN", 3) => Gate::Mcn {
            controls: fields[1].split(',').map(|c| number(c, line_no)).collect::<Result<_>>()?,
            target: n(2)?,
        },
        ("RST", 2) => Gate::Reset { target: n(1)? },
        ("CRST", 3) => Gate::CReset { control: n(1)?, target: n(2)? },
        _ => return Err(Error::Parse { line: line_no, message: format!("malformed gate `{line}`") }),
    };
    Ok(gate)
}
