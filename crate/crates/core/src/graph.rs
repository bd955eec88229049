//! Weighted digraphs as algebraic path problems.
//!
//! Two input forms are accepted. The edge list starts with the node count
//! and then has one `from to weight` triple per line; interval weights are
//! written `lo,hi`. The JSON form is
//! `{"nodes": 3, "edges": [{"from": 0, "to": 1, "weight": 4}, ...]}` where a
//! weight is a number, `"inf"`/`"-inf"`, or a two-element `[lo, hi]` array.
//!
//! Repeated edges are combined with `⊕`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSemiring};
use crate::matrix::Matrix;
use crate::semiring::{format_scalar, parse_scalar, ElementText, ScalarRing, Semiring};

#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Point(f64),
    Interval(Interval<ScalarRing>),
}

impl Weight {
    fn to_interval(&self, ring: ScalarRing) -> Result<Interval<ScalarRing>> {
        match self {
            Weight::Point(x) => Interval::point(ring, *x),
            Weight::Interval(iv) => Ok(iv.clone()),
        }
    }

    fn combine(&self, other: &Weight, ring: ScalarRing) -> Result<Weight> {
        Ok(match (self, other) {
            (Weight::Point(a), Weight::Point(b)) => Weight::Point(ring.add(a, b)),
            _ => Weight::Interval(self.to_interval(ring)?.add(&other.to_interval(ring)?)?),
        })
    }

    fn to_json(&self) -> Value {
        fn scalar(x: f64) -> Value {
            if x.is_finite() {
                json!(x)
            } else {
                json!(format_scalar(x))
            }
        }
        match self {
            Weight::Point(x) => scalar(*x),
            Weight::Interval(iv) => json!([scalar(*iv.lo()), scalar(*iv.hi())]),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    /// The full closure `H*`.
    Closure,
    /// Row `src` of `H*`: path values from one source.
    Distances(usize),
    /// `X = H ⊙ X ⊕ F` with `H` from the graph and `F` supplied separately.
    Bellman,
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Closure => f.write_str("closure"),
            Query::Distances(s) => write!(f, "dist:{s}"),
            Query::Bellman => f.write_str("bellman"),
        }
    }
}

impl FromStr for Query {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "closure" => Ok(Query::Closure),
            "bellman" => Ok(Query::Bellman),
            _ => match t.strip_prefix("dist:") {
                Some(src) => src
                    .parse()
                    .map(Query::Distances)
                    .map_err(|_| Error::domain(format!("bad source node in query {s:?}"))),
                None => Err(Error::domain(format!(
                    "unknown query {s:?} (expected closure, dist:<src> or bellman)"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphProblem {
    pub nodes: usize,
    pub edges: Vec<Edge>,
    pub ring: ScalarRing,
    pub query: Query,
}

impl GraphProblem {
    /// Validates nodes, carriers and the query, and `⊕`-combines repeated
    /// edges (keeping the position of the first occurrence).
    pub fn new(nodes: usize, raw_edges: Vec<Edge>, ring: ScalarRing, query: Query) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::domain("graph must have at least one node"));
        }
        if let Query::Distances(src) = query {
            if src >= nodes {
                return Err(Error::domain(format!(
                    "source node {src} out of range 0..{nodes}"
                )));
            }
        }
        let mut edges: Vec<Edge> = Vec::with_capacity(raw_edges.len());
        for e in raw_edges {
            validate_edge(&e, nodes, ring)?;
            match edges.iter_mut().find(|x| x.from == e.from && x.to == e.to) {
                Some(existing) => existing.weight = existing.weight.combine(&e.weight, ring)?,
                None => edges.push(e),
            }
        }
        Ok(Self {
            nodes,
            edges,
            ring,
            query,
        })
    }

    /// Parses either input form; JSON is recognised by a leading `{`.
    pub fn parse(text: &str, ring: ScalarRing, query: Query) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text, ring, query)
        } else {
            Self::parse_edge_list(text, ring, query)
        }
    }

    pub fn parse_edge_list(text: &str, ring: ScalarRing, query: Query) -> Result<Self> {
        let mut nodes = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| match e {
                Error::Parse { .. } => e,
                other => Error::parse(line_no, other.to_string()),
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let Some(n) = nodes else {
                if tokens.len() != 1 {
                    return Err(Error::parse(line_no, "first line must be the node count"));
                }
                nodes = Some(tokens[0].parse::<usize>().map_err(|_| {
                    Error::parse(line_no, format!("invalid node count {:?}", tokens[0]))
                })?);
                continue;
            };
            if tokens.len() != 3 {
                return Err(Error::parse(
                    line_no,
                    format!("expected `from to weight`, found {line:?}"),
                ));
            }
            let node = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("invalid node index {t:?}")))
            };
            let edge = Edge {
                from: node(tokens[0])?,
                to: node(tokens[1])?,
                weight: parse_weight(tokens[2], ring).map_err(at)?,
            };
            validate_edge(&edge, n, ring).map_err(at)?;
            edges.push(edge);
        }
        let nodes = nodes.ok_or_else(|| Error::parse(0, "missing node count"))?;
        Self::new(nodes, edges, ring, query)
    }

    pub fn parse_json(text: &str, ring: ScalarRing, query: Query) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let bad = |m: String| Error::parse(0, m);
        let nodes = doc
            .get("nodes")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("\"nodes\" must be a nonnegative integer".into()))? as usize;
        let list = match doc.get("edges") {
            None => Vec::new(),
            Some(Value::Array(a)) => a.clone(),
            Some(_) => return Err(bad("\"edges\" must be an array".into())),
        };
        let mut edges = Vec::with_capacity(list.len());
        for (k, e) in list.iter().enumerate() {
            let idx = |key: &str| {
                e.get(key)
                    .and_then(Value::as_u64)
                    .map(|v| v as usize)
                    .ok_or_else(|| bad(format!("edge {k}: \"{key}\" must be a node index")))
            };
            let weight = e
                .get("weight")
                .ok_or_else(|| bad(format!("edge {k}: missing \"weight\"")))
                .and_then(|w| weight_from_json(w, ring).map_err(|err| bad(format!("edge {k}: {err}"))))?;
            edges.push(Edge {
                from: idx("from")?,
                to: idx("to")?,
                weight,
            });
        }
        Self::new(nodes, edges, ring, query)
    }

    /// Edge-list text that parses back to `self`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.nodes);
        for e in &self.edges {
            let w = match &e.weight {
                Weight::Point(x) => format_scalar(*x),
                Weight::Interval(iv) => format!("{},{}", format_scalar(*iv.lo()), format_scalar(*iv.hi())),
            };
            out.push_str(&format!("{} {} {}\n", e.from, e.to, w));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({"from": e.from, "to": e.to, "weight": e.weight.to_json()}))
            .collect();
        json!({"nodes": self.nodes, "edges": edges})
    }

    pub fn has_interval_weights(&self) -> bool {
        self.edges.iter().any(|e| matches!(e.weight, Weight::Interval(_)))
    }

    /// `H[i][j]` = weight of `i → j`, `0̸` when absent.
    pub fn point_matrix(&self) -> Result<Matrix<ScalarRing>> {
        let mut h = Matrix::zeros(self.ring, self.nodes, self.nodes)?;
        for e in &self.edges {
            match e.weight {
                Weight::Point(x) => h.set(e.from, e.to, x)?,
                Weight::Interval(_) => {
                    return Err(Error::domain(
                        "graph has interval weights; use the interval matrix",
                    ))
                }
            }
        }
        Ok(h)
    }

    /// `H` over `I(S)`; point weights become degenerate intervals.
    pub fn interval_matrix(&self) -> Result<Matrix<IntervalSemiring<ScalarRing>>> {
        let iring = IntervalSemiring::new(self.ring)?;
        let mut h = Matrix::zeros(iring, self.nodes, self.nodes)?;
        for e in &self.edges {
            h.set(e.from, e.to, e.weight.to_interval(self.ring)?)?;
        }
        Ok(h)
    }

    /// `H*`: entry `(i, j)` is the `⊕`-sum over all paths `i → j` of the
    /// `⊙`-product of edge weights.
    pub fn shortest_paths(&self) -> Result<Matrix<ScalarRing>> {
        self.point_matrix()?.star()
    }
}

fn validate_edge(e: &Edge, nodes: usize, ring: ScalarRing) -> Result<()> {
    for v in [e.from, e.to] {
        if v >= nodes {
            return Err(Error::domain(format!("node {v} out of range 0..{nodes}")));
        }
    }
    match &e.weight {
        Weight::Point(x) => ring.check(x),
        Weight::Interval(iv) => {
            if *iv.base() != ring {
                return Err(Error::RingMismatch {
                    left: ring.name(),
                    right: iv.base().name(),
                });
            }
            Ok(())
        }
    }
}

fn parse_weight(token: &str, ring: ScalarRing) -> Result<Weight> {
    if token.contains(',') || token.starts_with('[') {
        let iring = IntervalSemiring::new(ring)?;
        Ok(Weight::Interval(iring.parse_elem(token)?))
    } else {
        Ok(Weight::Point(ring.parse_elem(token)?))
    }
}

fn weight_from_json(w: &Value, ring: ScalarRing) -> Result<Weight> {
    fn scalar(v: &Value, ring: ScalarRing) -> Result<f64> {
        let x = match v {
            Value::Number(n) => n
                .as_f64()
                .ok_or_else(|| Error::domain(format!("unrepresentable number {n}")))?,
            Value::String(s) => parse_scalar(s)?,
            Value::Bool(b) => f64::from(u8::from(*b)),
            other => return Err(Error::domain(format!("invalid weight {other}"))),
        };
        ring.check(&x)?;
        Ok(x)
    }
    match w {
        Value::Array(pair) if pair.len() == 2 => {
            let iring = IntervalSemiring::new(ring)?;
            Ok(Weight::Interval(iring.interval(scalar(&pair[0], ring)?, scalar(&pair[1], ring)?)?))
        }
        Value::Array(_) => Err(Error::domain("interval weight needs exactly two bounds")),
        other => Ok(Weight::Point(scalar(other, ring)?)),
    }
}
