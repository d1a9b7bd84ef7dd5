//! Towers of certified 2-lifts written to disk.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::bound::Verdict;
use crate::error::{Error, Result};
use crate::graph::{Graph, Signing};
use crate::search::{certify_ramanujan_with, find_good_signing_with, Certificate, SearchConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseSpec {
    /// `K_{d,d}`.
    Regular(usize),
    /// `K_{c,d}`.
    Biregular(usize, usize),
}

impl BaseSpec {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            BaseSpec::Regular(d) => Graph::complete_bipartite(d, d),
            BaseSpec::Biregular(c, d) => Graph::complete_bipartite(c, d),
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Regular(d) => write!(f, "regular {d}"),
            BaseSpec::Biregular(c, d) => write!(f, "biregular {c} {d}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyStep {
    pub index: usize,
    pub graph: Graph,
    pub graph_path: PathBuf,
    pub certificate: Certificate,
    pub certificate_path: PathBuf,
    /// Signing that produced the next graph, absent on the last step.
    pub signing: Option<(Signing, Certificate)>,
    pub signing_path: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct FamilyRun {
    pub base: BaseSpec,
    pub steps: usize,
    pub artifacts: Vec<FamilyStep>,
}

#[derive(Serialize)]
struct ManifestStep {
    index: usize,
    n: usize,
    m: usize,
    graph: String,
    certificate: String,
    verdict: Verdict,
    signing: Option<String>,
    signing_certificate: Option<String>,
    signing_verdict: Option<Verdict>,
}

#[derive(Serialize)]
struct Manifest {
    base: String,
    steps: usize,
    artifacts: Vec<ManifestStep>,
}

pub fn run_family(base: BaseSpec, steps: usize, out_dir: &Path) -> Result<FamilyRun> {
    run_family_with(base, steps, out_dir, &SearchConfig::default())
}

/// `g{k}.el` and `c{k}.json` for each step, `s{k}.sign` and `s{k}.json` for
/// the signing lifting step `k` to `k+1`, and `manifest.json`.
pub fn run_family_with(
    base: BaseSpec,
    steps: usize,
    out_dir: &Path,
    cfg: &SearchConfig,
) -> Result<FamilyRun> {
    let g0 = base.graph()?;
    if steps > 0 {
        // the descent runs on every graph but the last
        let scale = 1usize << (steps - 1).min(usize::BITS as usize - 1);
        let (n, m) = (g0.vertex_count() * scale, g0.edge_count() * scale);
        if n > cfg.max_vertices || m > cfg.max_edges {
            return Err(Error::BudgetExceeded(format!(
                "{steps} steps from {base} need a descent on {n} vertices and {m} edges"
            )));
        }
    }
    fs::create_dir_all(out_dir)?;
    let mut artifacts = Vec::with_capacity(steps + 1);
    let mut g = g0;
    let profile = degree_profile(&g);
    for k in 0..=steps {
        if k > 0 {
            let prev: &FamilyStep = artifacts.last().unwrap();
            check_doubling(&prev.graph, &g, &profile, k)?;
        }
        let cert = certify_ramanujan_with(&g, &cfg.precision)?;
        if !cert.verdict.is_within() {
            return Err(Error::CertificationFailed(format!(
                "step {k}: graph on {} vertices has a non-trivial eigenvalue above {}",
                g.vertex_count(),
                cert.bound.kind
            )));
        }
        let graph_path = out_dir.join(format!("g{k}.el"));
        fs::write(&graph_path, g.to_edge_list())?;
        let certificate_path = out_dir.join(format!("c{k}.json"));
        fs::write(&certificate_path, cert.to_json())?;

        let (signing, signing_path, next) = if k < steps {
            let (s, scert) = find_good_signing_with(&g, cfg)?;
            if !scert.headline_verdict().is_within() {
                return Err(Error::CertificationFailed(format!(
                    "step {k}: descent ended above the largest matching root"
                )));
            }
            let path = out_dir.join(format!("s{k}.sign"));
            fs::write(&path, s.to_text())?;
            fs::write(out_dir.join(format!("s{k}.json")), scert.to_json())?;
            let lifted = g.two_lift(&s)?;
            (Some((s, scert)), Some(path), Some(lifted))
        } else {
            (None, None, None)
        };
        artifacts.push(FamilyStep {
            index: k,
            graph: g.clone(),
            graph_path,
            certificate: cert,
            certificate_path,
            signing,
            signing_path,
        });
        if let Some(next) = next {
            g = next;
        }
    }
    let run = FamilyRun {
        base,
        steps,
        artifacts,
    };
    write_manifest(&run, out_dir)?;
    Ok(run)
}

fn degree_profile(g: &Graph) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

fn check_doubling(prev: &Graph, g: &Graph, base: &[(usize, usize)], k: usize) -> Result<()> {
    let doubled: Vec<(usize, usize)> = base.iter().map(|&(d, c)| (d, c << k)).collect();
    if g.vertex_count() != 2 * prev.vertex_count()
        || g.edge_count() != 2 * prev.edge_count()
        || degree_profile(g) != doubled
    {
        return Err(Error::CertificationFailed(format!(
            "step {k}: lift does not double the degree profile"
        )));
    }
    Ok(())
}

fn write_manifest(run: &FamilyRun, out_dir: &Path) -> Result<()> {
    let name = |p: &Path| p.file_name().unwrap().to_string_lossy().into_owned();
    let manifest = Manifest {
        base: run.base.to_string(),
        steps: run.steps,
        artifacts: run
            .artifacts
            .iter()
            .map(|s| ManifestStep {
                index: s.index,
                n: s.graph.vertex_count(),
                m: s.graph.edge_count(),
                graph: name(&s.graph_path),
                certificate: name(&s.certificate_path),
                verdict: s.certificate.verdict,
                signing: s.signing_path.as_deref().map(name),
                signing_certificate: s.signing.as_ref().map(|_| format!("s{}.json", s.index)),
                signing_verdict: s.signing.as_ref().map(|(_, c)| c.headline_verdict()),
            })
            .collect(),
    };
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(out_dir.join("manifest.json"), text)?;
    Ok(())
}
