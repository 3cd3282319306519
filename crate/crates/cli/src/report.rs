//! Report records: one self-contained object per input graph, stable schema.

use serde::Serialize;

use inpart::partition::{PartitionFlags, Ratio};
use inpart::search::{GapEntry, SearchStats, SweepEntry};
use inpart::structured::{CensusFilter, ColorClass, NMinus4Route};

pub const SCHEMA: &str = "inpart.report.v1";

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub schema: &'static str,
    /// Zero-based index of the graph in the input stream.
    pub index: usize,
    /// Input file path, `-` for stdin, or `generate`.
    pub source: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Ratio>,
    /// Canonical graph6 of the input graph (absent on parse errors).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub status: String,
    /// Witness side-A mask, hex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<PartitionFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<CensusFilter>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<SweepEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<GapEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<NMinus4Route>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_class: Option<ColorClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub stats: SearchStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    pub fn new(index: usize, source: &str, command: &str) -> Self {
        Record {
            schema: SCHEMA,
            index,
            source: source.to_string(),
            command: command.to_string(),
            method: None,
            q: None,
            graph6: None,
            n: None,
            status: "ok".into(),
            witness: None,
            witness_size: None,
            cut: None,
            flags: None,
            count: None,
            filter: None,
            entries: None,
            gaps: None,
            route: None,
            complement_class: None,
            check: None,
            expected: None,
            actual: None,
            pass: None,
            stats: SearchStats::default(),
            error: None,
        }
    }

    pub fn fail(mut self, message: String) -> Self {
        self.status = "error".into();
        self.error = Some(message);
        self
    }
}

/// Flat projection for CSV output.
#[derive(Debug, Serialize)]
pub struct CsvRecord<'a> {
    pub index: usize,
    pub source: &'a str,
    pub command: &'a str,
    pub method: Option<&'a str>,
    pub q: Option<String>,
    pub graph6: Option<&'a str>,
    pub n: Option<usize>,
    pub status: &'a str,
    pub witness: Option<&'a str>,
    pub witness_size: Option<usize>,
    pub cut: Option<usize>,
    pub q_internal: Option<bool>,
    pub q_external: Option<bool>,
    pub bisection: Option<bool>,
    pub count: Option<u64>,
    pub check: Option<&'a str>,
    pub pass: Option<bool>,
    pub nodes: u64,
    pub moves: u64,
    pub error: Option<&'a str>,
}

impl<'a> From<&'a Record> for CsvRecord<'a> {
    fn from(r: &'a Record) -> Self {
        CsvRecord {
            index: r.index,
            source: &r.source,
            command: &r.command,
            method: r.method.as_deref(),
            q: r.q.map(|q| q.to_string()),
            graph6: r.graph6.as_deref(),
            n: r.n,
            status: &r.status,
            witness: r.witness.as_deref(),
            witness_size: r.witness_size,
            cut: r.cut,
            q_internal: r.flags.map(|f| f.q_internal),
            q_external: r.flags.map(|f| f.q_external),
            bisection: r.flags.map(|f| f.bisection),
            count: r.count,
            check: r.check.as_deref(),
            pass: r.pass,
            nodes: r.stats.nodes,
            moves: r.stats.moves,
            error: r.error.as_deref(),
        }
    }
}
