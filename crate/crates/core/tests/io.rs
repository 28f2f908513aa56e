mod common;

use common::{generated_graphs, random_mixed_graph};
use mixcage::generators::{gen_bipartite_circulant, gen_cage_136, gen_family, gen_projective_incidence, Side};
use mixcage::io::{build_catalog, catalog_csv, export_dot, import_json, parse_document, write_json, CSV_HEADER};
use mixcage::{Field, MixedGraph, VertexLabel};
use proptest::prelude::*;

#[derive(Debug, PartialEq)]
enum Token {
    Word(String),
    Quoted(String),
    Arrow,
    Punct(char),
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '"' => {
                let mut s = String::new();
                while let Some(c) = chars.next() {
                    match c {
                        '\\' => s.push(chars.next().expect("escape")),
                        '"' => break,
                        c => s.push(c),
                    }
                }
                tokens.push(Token::Quoted(s));
            }
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                tokens.push(Token::Arrow);
            }
            '{' | '}' | '[' | ']' | ';' | '=' => tokens.push(Token::Punct(c)),
            c => {
                let mut s = c.to_string();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Word(s));
            }
        }
    }
    tokens
}

/// Reads back the subset of DOT that `export_dot` writes.
fn parse_dot(text: &str, field: Option<Field>) -> MixedGraph {
    let tokens = tokenize(text);
    assert_eq!(tokens[..3], [Token::Word("digraph".into()), Token::Word("G".into()), Token::Punct('{')]);
    assert_eq!(tokens.last(), Some(&Token::Punct('}')));
    let label = |t: &Token| match t {
        Token::Quoted(s) => VertexLabel::parse(s, field).unwrap(),
        other => panic!("expected a quoted id, got {other:?}"),
    };
    let (mut vertices, mut edges, mut arcs) = (Vec::new(), Vec::new(), Vec::new());
    let body = &tokens[3..tokens.len() - 1];
    for stmt in body.split(|t| *t == Token::Punct(';')).filter(|s| !s.is_empty()) {
        match stmt {
            [v] => vertices.push(label(v)),
            [u, Token::Arrow, v] => arcs.push((label(u), label(v))),
            [u, Token::Arrow, v, Token::Punct('['), Token::Word(k), Token::Punct('='), Token::Word(val), Token::Punct(']')]
                if k == "dir" && val == "none" =>
            {
                edges.push((label(u), label(v)))
            }
            other => panic!("unexpected statement {other:?}"),
        }
    }
    MixedGraph::build(vertices, edges, arcs).unwrap()
}

fn field_of(graph: &MixedGraph) -> Option<Field> {
    graph.field_order().map(|q| Field::new(q).unwrap())
}

#[test]
fn dot_reparses_to_same_graph() {
    for (name, graph) in generated_graphs(200) {
        let back = parse_dot(&export_dot(&graph), field_of(&graph));
        assert_eq!(back, graph, "{name}");
    }
}

#[test]
fn dot_edges_are_undirected() {
    let text = export_dot(&gen_cage_136().unwrap());
    assert_eq!(text.matches("[dir=none]").count(), 45);
    assert_eq!(text.lines().filter(|l| l.contains("->") && !l.contains("dir=none")).count(), 30);
    assert!(text.contains("\"(a,a2)\";"));
}

#[test]
fn family_dot_statement_counts() {
    let text = export_dot(&gen_family(3).unwrap());
    let body: Vec<&str> = text.lines().filter(|l| l.starts_with("  ")).collect();
    let nodes = body.iter().filter(|l| !l.contains("->")).count();
    let edges = body.iter().filter(|l| l.contains("[dir=none]")).count();
    let arcs = body.iter().filter(|l| l.contains("->") && !l.contains("[dir=none]")).count();
    assert_eq!((nodes, edges, arcs), (36, 54, 36));
}

#[test]
fn json_round_trip_for_generators() {
    for (name, graph) in generated_graphs(usize::MAX) {
        let text = write_json(&graph);
        let back = import_json(&parse_document(&text).unwrap()).unwrap();
        assert_eq!(back, graph, "{name}");
        assert_eq!(write_json(&back), text, "{name}");
    }
}

#[test]
fn outputs_are_byte_stable() {
    let builders: Vec<Box<dyn Fn() -> MixedGraph>> = vec![
        Box::new(|| gen_family(11).unwrap()),
        Box::new(|| gen_projective_incidence(4).unwrap()),
        Box::new(|| gen_bipartite_circulant(11, Side::Point, 3, &[0, 1, 2], &[1, 2, 3]).unwrap()),
        Box::new(|| gen_cage_136().unwrap()),
    ];
    for build in &builders {
        let (a, b) = (build(), build());
        assert_eq!(write_json(&a), write_json(&b));
        assert_eq!(export_dot(&a), export_dot(&b));
    }
    let csv = catalog_csv(&build_catalog(&[3, 5, 7]).unwrap());
    assert_eq!(csv, catalog_csv(&build_catalog(&[3, 5, 7]).unwrap()));
    assert!(csv.starts_with(CSV_HEADER));
    assert_eq!(csv.lines().nth(1), Some("3,1,1,3,36,true,36,14,30,30"));
}

#[test]
fn malformed_documents_are_rejected() {
    assert!(parse_document("{").is_err());
    assert!(parse_document(r#"{"format":"mixed-graph/v1","field_order":null,"vertices":[],"edges":[],"arcs":[],"x":1}"#).is_err());
    let dup = r#"{"format":"mixed-graph/v1","field_order":null,"vertices":["n0","n1"],"edges":[[0,1]],"arcs":[[0,1]]}"#;
    assert!(import_json(&parse_document(dup).unwrap()).is_err());
    let range = r#"{"format":"mixed-graph/v1","field_order":null,"vertices":["n0"],"edges":[[0,3]],"arcs":[]}"#;
    let err = import_json(&parse_document(range).unwrap()).unwrap_err().to_string();
    assert!(err.contains("edges[0]"), "{err}");
    let label = r#"{"format":"mixed-graph/v1","field_order":5,"vertices":["(7,1)"],"edges":[],"arcs":[]}"#;
    let err = import_json(&parse_document(label).unwrap()).unwrap_err().to_string();
    assert!(err.contains("vertices[0]"), "{err}");
}

proptest! {
    #[test]
    fn random_graphs_round_trip(seed in any::<u64>()) {
        let graph = random_mixed_graph(seed, 30);
        let text = write_json(&graph);
        prop_assert_eq!(&import_json(&parse_document(&text).unwrap()).unwrap(), &graph);
        prop_assert_eq!(parse_dot(&export_dot(&graph), None), graph);
    }
}
