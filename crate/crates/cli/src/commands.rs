use crate::json;
use mapforge::core_scheme::{
    consistent_naming, consistent_namings, enumerate_schemes, mirror, permutations, BinaryBijection, UnlabeledScheme,
};
use mapforge::map_core::{radial, radial_inverse};
use mapforge::motzkin::{series_b, series_d_bullet, series_d_circ};
use mapforge::oracle_enum::{
    count_bivariate, enumerate_4valent_bicolorable, enumerate_good_map_list, enumerate_good_maps,
    enumerate_rooted_maps_with, verify_propp, CountTable,
};
use mapforge::series_engine::pipeline::{assemble_o_and_m, r_binary_factored, r_scheme_factored, r_uni};
use mapforge::series_engine::{bicolored_tree_series, rational_t_and_b, tree_series, TruncatedSeries};
use mapforge::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub max_nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Edges,
    Bivariate,
    Bc4,
    Good,
}

pub fn count(cfg: &RunConfig, genus: usize, edges: usize, kind: CountKind) -> Result<String> {
    let table = match kind {
        CountKind::Edges | CountKind::Bivariate => {
            let maps = enumerate_rooted_maps_with(genus, edges, cfg.max_nodes)?;
            if kind == CountKind::Edges {
                let mut t = CountTable::new(genus, &["E"]);
                t.add(vec![edges], maps.len() as u64);
                t
            } else {
                let mut t = CountTable::new(genus, &["V", "F"]);
                for m in maps {
                    t.add(vec![m.num_vertices(), m.num_faces()], 1);
                }
                t
            }
        }
        CountKind::Bc4 => enumerate_4valent_bicolorable(genus, edges)?,
        CountKind::Good => enumerate_good_maps(genus, edges)?,
    };
    Ok(match cfg.format {
        Format::Json => json::table(&table).to_string(),
        Format::Csv => json::table_csv(&table),
    })
}

/// Result of a `verify` run.
#[derive(Clone, Debug)]
pub struct Report {
    pub check: &'static str,
    pub checked: u64,
    pub witness: Option<String>,
}

impl Report {
    fn new(check: &'static str) -> Self {
        Report { check, checked: 0, witness: None }
    }
    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.check,
            "status": if self.passed() { "pass" } else { "fail" },
            "checked": self.checked,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w);
        }
        v
    }
}

pub fn verify_radial(cfg: &RunConfig, genus: usize, edges: usize) -> Result<Report> {
    let mut r = Report::new("radial");
    for n in 1..=edges {
        let mut pushed = CountTable::new(genus, &["Fb", "Fw"]);
        for m in enumerate_rooted_maps_with(genus, n, cfg.max_nodes)? {
            let rad = radial(&m);
            let c = rad.map.face_coloring()?;
            let back = radial_inverse(&rad.map)?;
            r.expect((c.n_black(), c.n_white()) == (m.num_vertices(), m.num_faces()), || format!("colors of {m}"));
            r.expect(back.is_isomorphic_rooted(&m), || format!("inverse of {m}"));
            pushed.add(vec![c.n_black(), c.n_white()], 1);
        }
        r.expect(pushed == enumerate_4valent_bicolorable(genus, n)?, || format!("census at {n} edges"));
    }
    Ok(r)
}

pub fn verify_closure(genus: usize, edges: usize) -> Result<Report> {
    let mut r = Report::new("closure");
    for e in 2 * genus..=edges {
        let mut images = Vec::new();
        for u in enumerate_good_map_list(genus, e)? {
            let c = u.closure()?;
            let col = c.map.face_coloring()?;
            let (lb, lw) = u.leaf_colors()?;
            r.expect((lb + 1, lw) == (col.n_black(), col.n_white()), || format!("face colors of the closure of {u}"));
            images.push(c.map.canonical_form());
        }
        let n = images.len();
        images.sort();
        images.dedup();
        r.expect(images.len() == n, || format!("two closures coincide at {e} interior edges"));
        let good = enumerate_good_maps(genus, e)?.relabeled(&["Fb", "Fw"]);
        r.expect(good == enumerate_4valent_bicolorable(genus, e + 1 - 2 * genus)?, || {
            format!("census at {e} interior edges")
        });
    }
    Ok(r)
}

pub fn verify_propp_up_to(cfg: &RunConfig, max_edges: usize) -> Result<Report> {
    let mut r = Report::new("propp");
    for n in 1..=max_edges {
        for g in 0..=n / 2 {
            for m in enumerate_rooted_maps_with(g, n, cfg.max_nodes)? {
                if m.is_bicolorable() {
                    let ok = verify_propp(&m)?;
                    r.expect(ok, || m.to_string());
                }
            }
        }
    }
    Ok(r)
}

fn mirror_schemes(genus: usize, sample: usize) -> Result<Vec<UnlabeledScheme>> {
    let census = enumerate_schemes(genus)?;
    Ok(match genus {
        1 => census.rooted().cloned().collect(),
        _ => {
            let smallest = census.rooted().map(|s| s.n_vertices()).min().unwrap_or(0);
            census.rooted().filter(|s| s.n_vertices() == smallest).take(sample).cloned().collect()
        }
    })
}

pub fn verify_mirror(genus: usize, sample: usize) -> Result<Report> {
    if genus == 0 || genus > 2 {
        return Err(Error::ResourceLimit(format!("scheme census for genus {genus} is not supported")));
    }
    let mut r = Report::new("mirror");
    for s in mirror_schemes(genus, sample)? {
        for nu in consistent_namings(&s) {
            for pi in permutations(s.n_vertices()) {
                let ok = r_uni(&s, &nu, &mirror(&pi))?.par_bar() == r_uni(&s, &nu, &pi)?;
                r.expect(ok, || format!("univariate, naming {nu:?}, order {pi:?}"));
            }
        }
        let nu = consistent_naming(&s)?;
        for bb in BinaryBijection::all(s.n_vertices()) {
            let lhs = r_binary_factored(&s, &nu, &bb)?.circ().par_bar();
            let ok = lhs == r_binary_factored(&s, &nu, &bb.mirror())?.circ();
            r.expect(ok, || format!("bivariate, {bb:?}"));
        }
        let ok = r_scheme_factored(&s)?.circ().is_par_symmetric();
        r.expect(ok, || format!("symmetry of the scheme {}", s.map()));
    }
    Ok(r)
}

fn census_series(genus: usize, order: u32) -> Result<TruncatedSeries> {
    let mut want = TruncatedSeries::zero(2, order);
    for (k, &c) in &count_bivariate(genus, order as usize)?.counts {
        want.add_term(vec![k[0] as u32, k[1] as u32], BigRational::from_integer(c.into()));
    }
    Ok(want)
}

pub fn verify_shortcut(genus: usize, edges: usize) -> Result<Report> {
    let mut r = Report::new("shortcut");
    let a = assemble_o_and_m(genus, edges as u32)?;
    let want = census_series(genus, edges as u32)?;
    r.expect(a.series == want, || format!("series differs from the census up to {edges} edges"));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    T,
    Tbc,
    D,
    B,
    M1,
}

/// Coefficients of `T(z)`: `3^{n-1}` times the Catalan number `C_{n-1}`.
fn tree_coefficients(order: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(1, order);
    let mut catalan = BigInt::from(1);
    for n in 1..=order {
        let m = n - 1;
        let c = &catalan * BigInt::from(3).pow(m);
        out.add_term(vec![n], BigRational::from_integer(c));
        catalan = catalan * BigInt::from(2 * (2 * m + 1)) / BigInt::from(m + 2);
    }
    out
}

pub fn series(name: SeriesName, order: u32, check_oracle: bool) -> Result<(String, bool)> {
    let mut components = Map::new();
    let mut rational = None;
    let oracle_ok = match name {
        SeriesName::T => {
            let t = tree_series(order)?;
            components.insert("T".into(), json::series(&t));
            t == tree_coefficients(order)
        }
        SeriesName::Tbc => {
            let (b, w) = bicolored_tree_series(order)?;
            components.insert("T_bullet".into(), json::series(&b));
            components.insert("T_circ".into(), json::series(&w));
            b.diagonal() == tree_coefficients(order) && w.diagonal() == tree_coefficients(order) && b.swap() == w
        }
        SeriesName::D | SeriesName::B => {
            let subs = [series_d_bullet(order)?, series_d_circ(order)?];
            let (tb, tw, rb) = rational_t_and_b();
            let tb_ok = TruncatedSeries::eval_rational(&tb, &subs)? == TruncatedSeries::var(2, order, 0)
                && TruncatedSeries::eval_rational(&tw, &subs)? == TruncatedSeries::var(2, order, 1);
            if name == SeriesName::D {
                components.insert("D_bullet".into(), json::series(&subs[0]));
                components.insert("D_circ".into(), json::series(&subs[1]));
                tb_ok
            } else {
                let b = series_b(order)?;
                components.insert("B".into(), json::series(&b));
                TruncatedSeries::eval_rational(&rb, &subs)? == b && b.swap() == b
            }
        }
        SeriesName::M1 => {
            let a = assemble_o_and_m(1, order)?;
            components.insert("M1".into(), json::series(&a.series));
            rational = Some(json::rational(&a.rational));
            !check_oracle || a.series == census_series(1, order)?
        }
    };
    let mut out = json!({
        "series": format!("{name:?}"),
        "order": order,
        "components": Value::Object(components),
    });
    if let Some(r) = rational {
        out["rational"] = r;
    }
    if check_oracle {
        out["oracle"] = json!(if oracle_ok { "pass" } else { "fail" });
    }
    Ok((out.to_string(), !check_oracle || oracle_ok))
}
