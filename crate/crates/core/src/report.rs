//! Serialization helpers shared by witnesses and reports.

use serde::Serializer;

use crate::graph::Graph;

pub(crate) fn ser_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

pub(crate) fn ser_opt_graph6<S: Serializer>(
    g: &Option<Graph>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_some(&g.to_graph6()),
        None => s.serialize_none(),
    }
}
