use serde::{Deserialize, Serialize};

use super::WeightedGraph;
use crate::error::GraphError;

/// On-disk graph form: `{"n": int, "edges": [[u, v, w], ...], "labels": [...]?}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&WeightedGraph<f64>> for GraphJson {
    fn from(g: &WeightedGraph<f64>) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|e| (e.u, e.v, e.w)).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for WeightedGraph<f64> {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        let g = WeightedGraph::from_edge_list(value.n, &value.edges)?;
        match value.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl WeightedGraph<f64> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph JSON serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Schema(e.to_string()))?;
        raw.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_rejects() {
        let g = WeightedGraph::from_json(r#"{"n":3,"edges":[[0,1,1],[1,2,2.5]]}"#).unwrap();
        assert_eq!(g.weight(1, 2), Some(2.5));
        assert!(matches!(WeightedGraph::from_json(r#"{"n":3}"#), Err(GraphError::Schema(_))));
        assert_eq!(
            WeightedGraph::from_json(r#"{"n":2,"edges":[[0,0,1]]}"#),
            Err(GraphError::SelfLoop { u: 0 })
        );
        let labelled =
            WeightedGraph::from_json(r#"{"n":2,"edges":[[0,1,1]],"labels":["a","b"]}"#).unwrap();
        assert_eq!(labelled.labels().unwrap()[1], "b");
    }

    proptest! {
        #[test]
        fn integer_and_decimal_weights_round_trip(
            weights in proptest::collection::vec(prop_oneof![
                (-50i32..50).prop_filter("nonzero", |w| *w != 0).prop_map(f64::from),
                (-2.0f64..2.0).prop_filter("nonzero", |w| *w != 0.0),
            ], 1..6)
        ) {
            let n = weights.len() + 1;
            let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (i, i + 1, w)).collect();
            let g = WeightedGraph::from_edge_list(n, &edges).unwrap();
            let back = WeightedGraph::from_json(&g.to_json()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
