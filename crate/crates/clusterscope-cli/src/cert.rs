//! Text serialization of cover-search certificates. One record line per
//! node in preorder (the record's id is its preorder index), each followed
//! by its embedded quiver block; seed-level leaves also carry their
//! cluster, one `cluster <poly>` line per vertex. The header names the
//! certificate kind and stop predicate, and the block after it is the
//! starting quiver that node paths replay from.

use std::fmt::Write as _;

use clusterscope_core::{
    BanffCertificate, BanffNode, CertKind, CoveringPair, LaurentPoly, LeafPredicate,
    StopPredicate,
};

use crate::formats::{parse_qvr_from_lines, path_text, write_qvr, FormatError};

pub fn write_certificate(cert: &BanffCertificate) -> String {
    let kind = match cert.kind {
        CertKind::Freezing => "freezing",
        CertKind::Deleting => "deleting",
    };
    let mut out = String::new();
    writeln!(out, "certificate {kind} stop={}", cert.stop).unwrap();
    out.push_str(&write_qvr(&cert.root, "root"));
    let mut id = 0usize;
    write_node(&mut out, &cert.tree, None, &mut id);
    out
}

fn write_node(out: &mut String, node: &BanffNode, parent: Option<usize>, id: &mut usize) {
    let this = *id;
    *id += 1;
    let parent_text = match parent {
        Some(p) => p.to_string(),
        None => "none".to_string(),
    };
    match node {
        BanffNode::Branch { path, quiver, pair, children } => {
            writeln!(
                out,
                "branch {this} parent={parent_text} path={} pair={},{} freeze={}",
                path_text(path),
                pair.source + 1,
                pair.target + 1,
                pair.source + 1
            )
            .unwrap();
            out.push_str(&write_qvr(quiver, &format!("node{this}")));
            write_node(out, &children[0], Some(this), id);
            write_node(out, &children[1], Some(this), id);
        }
        BanffNode::Leaf { path, quiver, predicate, cluster } => {
            writeln!(
                out,
                "leaf {this} parent={parent_text} path={} predicate={predicate}",
                path_text(path)
            )
            .unwrap();
            if let Some(cluster) = cluster {
                for poly in cluster {
                    writeln!(out, "cluster {poly}").unwrap();
                }
            }
            out.push_str(&write_qvr(quiver, &format!("node{this}")));
        }
    }
}

struct Parser<'a> {
    lines: std::iter::Peekable<std::vec::IntoIter<(usize, &'a str)>>,
    next_id: usize,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

pub fn parse_certificate(text: &str) -> Result<BanffCertificate, FormatError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut p = Parser { lines: lines.into_iter().peekable(), next_id: 0 };
    let Some((ln, header)) = p.lines.next() else {
        return err(0, "empty certificate");
    };
    let rest = match header.strip_prefix("certificate ") {
        Some(rest) => rest,
        None => return err(ln, "expected `certificate <kind> stop=<predicate>`"),
    };
    let mut kind = None;
    let mut stop = None;
    for tok in rest.split_whitespace() {
        match tok {
            "freezing" => kind = Some(CertKind::Freezing),
            "deleting" => kind = Some(CertKind::Deleting),
            "stop=acyclic" => stop = Some(StopPredicate::Acyclic),
            "stop=isolated" => stop = Some(StopPredicate::Isolated),
            other => return err(ln, format!("unknown header token `{other}`")),
        }
    }
    let (Some(kind), Some(stop)) = (kind, stop) else {
        return err(ln, "header needs a kind and a stop predicate");
    };
    let (root, root_name) = parse_qvr_from_lines(&mut p.lines)?;
    if root_name != "root" {
        return err(ln, "the first quiver block must be named `root`");
    }
    let tree = parse_node(&mut p, None, root.vertex_count())?;
    if let Some((ln, extra)) = p.lines.next() {
        return err(ln, format!("unexpected trailing content `{extra}`"));
    }
    Ok(BanffCertificate { root, stop, kind, tree })
}

fn lookup<'a>(tokens: &[&'a str], key: &str, ln: usize) -> Result<&'a str, FormatError> {
    tokens
        .iter()
        .find_map(|t| t.strip_prefix(key))
        .ok_or(FormatError { line: ln, message: format!("missing `{key}...`") })
}

fn parse_node(p: &mut Parser<'_>, parent: Option<usize>, nvars: usize) -> Result<BanffNode, FormatError> {
    let Some((ln, line)) = p.lines.next() else {
        return err(0, "certificate tree ended early");
    };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let (record, rest) = match tokens.split_first() {
        Some((&"branch", rest)) => ("branch", rest),
        Some((&"leaf", rest)) => ("leaf", rest),
        _ => return err(ln, "expected a `branch` or `leaf` record"),
    };
    let id: usize = match rest.first().and_then(|t| t.parse().ok()) {
        Some(id) => id,
        None => return err(ln, "record needs a numeric id"),
    };
    if id != p.next_id {
        return err(ln, format!("expected preorder id {}, found {id}", p.next_id));
    }
    p.next_id += 1;
    let parent_text = lookup(rest, "parent=", ln)?;
    let declared_parent = if parent_text == "none" {
        None
    } else {
        match parent_text.parse() {
            Ok(p) => Some(p),
            Err(_) => return err(ln, "parent= must be a node id or `none`"),
        }
    };
    if declared_parent != parent {
        return err(ln, format!("node {id} declares the wrong parent"));
    }
    let path = crate::formats::parse_path(lookup(rest, "path=", ln)?)
        .map_err(|m| FormatError { line: ln, message: m })?;
    if record == "branch" {
        let pair_text = lookup(rest, "pair=", ln)?;
        let Some((a, b)) = pair_text.split_once(',') else {
            return err(ln, "pair needs two vertices");
        };
        let (Some(a), Some(b)) = (parse_vertex(a), parse_vertex(b)) else {
            return err(ln, "bad pair vertex");
        };
        let pair = CoveringPair { source: a, target: b };
        let freeze_text = lookup(rest, "freeze=", ln)?;
        match parse_vertex(freeze_text) {
            Some(v) if v == pair.source || v == pair.target => {}
            _ => return err(ln, "freeze= must name one of the pair's vertices"),
        }
        let (quiver, _) = parse_qvr_from_lines(&mut p.lines)?;
        let first = parse_node(p, Some(id), nvars)?;
        let second = parse_node(p, Some(id), nvars)?;
        Ok(BanffNode::Branch {
            path,
            quiver,
            pair,
            children: [Box::new(first), Box::new(second)],
        })
    } else {
        let predicate = match lookup(rest, "predicate=", ln)? {
            "acyclic" => LeafPredicate::Acyclic,
            "isolated" => LeafPredicate::Isolated,
            "known" => LeafPredicate::Known,
            other => return err(ln, format!("unknown predicate `{other}`")),
        };
        let mut cluster_lines: Vec<(usize, &str)> = Vec::new();
        while let Some((_, l)) = p.lines.peek() {
            if l.starts_with("cluster ") {
                let (ln, l) = p.lines.next().expect("peeked");
                cluster_lines.push((ln, l.strip_prefix("cluster ").expect("prefix checked")));
            } else {
                break;
            }
        }
        let cluster = if cluster_lines.is_empty() {
            None
        } else {
            let mut polys = Vec::new();
            for (ln, text) in cluster_lines {
                match LaurentPoly::parse(text, nvars) {
                    Ok(poly) => polys.push(poly),
                    Err(e) => return err(ln, format!("bad cluster entry: {e}")),
                }
            }
            Some(polys)
        };
        let (quiver, _) = parse_qvr_from_lines(&mut p.lines)?;
        Ok(BanffNode::Leaf { path, quiver, predicate, cluster })
    }
}

fn parse_vertex(tok: &str) -> Option<usize> {
    tok.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1)
}

/// Counts branch and leaf nodes of a tree.
pub fn shape(cert: &BanffCertificate) -> (usize, usize) {
    let mut branches = 0;
    let mut leaves = 0;
    for node in cert.nodes_preorder() {
        match node {
            BanffNode::Branch { .. } => branches += 1,
            BanffNode::Leaf { .. } => leaves += 1,
        }
    }
    (branches, leaves)
}
