use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::circuit::Mode;
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentKind {
    Workspace,
    PairResult,
    Enable,
    Scratch,
    Hit,
    Temp,
    Flag,
}

impl SegmentKind {
    pub const ORDER: [SegmentKind; 7] = [
        SegmentKind::Workspace,
        SegmentKind::PairResult,
        SegmentKind::Enable,
        SegmentKind::Scratch,
        SegmentKind::Hit,
        SegmentKind::Temp,
        SegmentKind::Flag,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SegmentKind::Workspace => "workspace",
            SegmentKind::PairResult => "pair_result",
            SegmentKind::Enable => "enable",
            SegmentKind::Scratch => "scratch",
            SegmentKind::Hit => "hit",
            SegmentKind::Temp => "temp",
            SegmentKind::Flag => "flag",
        }
    }
}

impl fmt::Display for SegmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SegmentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SegmentKind::ORDER
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidLayout(format!("unknown segment `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: usize,
    pub len: usize,
}

impl Segment {
    pub fn range(&self) -> Range<usize> {
        self.start..self.start + self.len
    }
}

/// Named contiguous line ranges of one register.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineLayout {
    segments: Vec<Segment>,
    total: usize,
    /// Arcs per pair, used to index the hit block.
    arcs: usize,
}

/// Scratch pool size: room for the widest detector ladder and for the
/// final all-pairs ladder.
pub fn scratch_lines(mode: Mode, n: usize, k: usize) -> usize {
    let detector = match mode {
        // 2k code controls plus both endpoint enables
        Mode::ReversibleFull => 2 * k,
        _ => 2 * k - 1,
    };
    detector.max(n.saturating_sub(2))
}

impl LineLayout {
    /// Layout of `mode` for `g`, segments in the fixed order workspace,
    /// pair_result, enable, scratch, hit, temp, flag.
    pub fn for_graph(mode: Mode, g: &Graph) -> Result<Self> {
        let enc = Encoding::new(g.vertex_count())?;
        Ok(LineLayout::build(mode, &enc, g.edge_count()))
    }

    pub(crate) fn build(mode: Mode, enc: &Encoding, m: usize) -> Self {
        let n = enc.vertex_count();
        let k = enc.bits_per_vertex();
        let mut sizes = vec![(SegmentKind::Workspace, n * k), (SegmentKind::PairResult, n)];
        if mode.has_enables() {
            sizes.push((SegmentKind::Enable, n));
        }
        sizes.push((SegmentKind::Scratch, scratch_lines(mode, n, k)));
        match mode {
            Mode::ReversibleFull => sizes.push((SegmentKind::Hit, 2 * m * n)),
            Mode::CmosOneshot => sizes.push((SegmentKind::Temp, 1)),
            Mode::CmosReduced => {}
        }
        sizes.push((SegmentKind::Flag, 1));

        let mut start = 0;
        let segments = sizes
            .into_iter()
            .map(|(kind, len)| {
                let seg = Segment { kind, start, len };
                start += len;
                seg
            })
            .collect();
        LineLayout { segments, total: start, arcs: if mode == Mode::ReversibleFull { 2 * m } else { 0 } }
    }

    /// Rebuilds a layout from explicit segments, checking that they are in
    /// canonical order, contiguous and cover `[0, total)`.
    pub fn from_segments(segments: Vec<Segment>, total: usize, arcs: usize) -> Result<Self> {
        let mut next = 0;
        let mut last_kind: Option<SegmentKind> = None;
        for seg in &segments {
            if seg.start != next {
                return Err(Error::InvalidLayout(format!(
                    "segment {} starts at {}, expected {next}",
                    seg.kind, seg.start
                )));
            }
            if last_kind.is_some_and(|k| k >= seg.kind) {
                return Err(Error::InvalidLayout(format!("segment {} out of order", seg.kind)));
            }
            last_kind = Some(seg.kind);
            next += seg.len;
        }
        if next != total {
            return Err(Error::InvalidLayout(format!("segments cover {next} lines, header declares {total}")));
        }
        Ok(LineLayout { segments, total, arcs })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, kind: SegmentKind) -> Option<&Segment> {
        self.segments.iter().find(|s| s.kind == kind)
    }

    pub fn len_of(&self, kind: SegmentKind) -> usize {
        self.segment(kind).map_or(0, |s| s.len)
    }

    pub fn range_of(&self, kind: SegmentKind) -> Range<usize> {
        self.segment(kind).map_or(0..0, |s| s.range())
    }

    fn line(&self, kind: SegmentKind, offset: usize) -> usize {
        let seg = self.segment(kind).unwrap_or_else(|| panic!("layout has no {kind} segment"));
        assert!(offset < seg.len, "{kind} offset {offset} >= {}", seg.len);
        seg.start + offset
    }

    pub fn pair_result(&self, pair: usize) -> usize {
        self.line(SegmentKind::PairResult, pair)
    }

    pub fn enable(&self, vertex: usize) -> usize {
        self.line(SegmentKind::Enable, vertex)
    }

    pub fn scratch(&self) -> Vec<usize> {
        self.range_of(SegmentKind::Scratch).collect()
    }

    /// Hit latch for arc `arc` (index into the directed arc list) at `pair`.
    pub fn hit(&self, arc: usize, pair: usize) -> usize {
        self.line(SegmentKind::Hit, pair * self.arcs + arc)
    }

    pub fn temp(&self) -> usize {
        self.line(SegmentKind::Temp, 0)
    }

    pub fn flag(&self) -> usize {
        self.line(SegmentKind::Flag, 0)
    }
}
