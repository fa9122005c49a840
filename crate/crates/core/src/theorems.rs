//! Structural characterizations of quadrangular tournaments.
//!
//! [`classify`] walks a fixed decision list: the first rule whose hypothesis
//! matches decides the verdict from that rule's conditions alone. Each
//! `verify_*` function evaluates one characterization independently of the
//! direct definition and reports whether the two agree.

use alloc::vec::Vec;

use crate::domination::gamma_exceeds;
use crate::generators::{rotational, u_n};
use crate::orthogonality::{is_in_quadrangular, is_out_quadrangular, is_quadrangular};
use crate::{bits, Error, Result, Symbol, Tournament, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    TrivialSmall,
    TransmitterReceiver,
    TransmitterOnly,
    ReceiverOnly,
    NotStrong,
    OutDegreeOne,
    InDegreeOne,
    Regular,
    DirectOracle,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::TrivialSmall => "trivial-small",
            Rule::TransmitterReceiver => "transmitter-receiver",
            Rule::TransmitterOnly => "transmitter-only",
            Rule::ReceiverOnly => "receiver-only",
            Rule::NotStrong => "not-strong",
            Rule::OutDegreeOne => "out-degree-one",
            Rule::InDegreeOne => "in-degree-one",
            Rule::Regular => "regular",
            Rule::DirectOracle => "direct-oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTrace {
    pub rule: Rule,
    pub conditions: Vec<Condition>,
    pub verdict: bool,
}

fn cond(name: &'static str, holds: bool) -> Condition {
    Condition { name, holds }
}

fn all_hold(cs: &[Condition]) -> bool {
    cs.iter().all(|c| c.holds)
}

// gamma_exceeds only fails for k outside 1..=3.
fn gamma_gt(t: &Tournament, k: usize) -> bool {
    gamma_exceeds(t, k).expect("k in 1..=3")
}

fn transmitter_receiver_conditions(t: &Tournament, s: usize, r: usize) -> Vec<Condition> {
    let core = t.without(&[s, r]).expect("n >= 3");
    alloc::vec![
        cond("gamma(T-{s,t})>2", gamma_gt(&core, 2)),
        cond("gamma((T-{s,t})^r)>2", gamma_gt(&core.dual(), 2)),
    ]
}

fn transmitter_only_conditions(t: &Tournament, s: usize) -> Vec<Condition> {
    let rest = t.without(&[s]).expect("n >= 3");
    alloc::vec![
        cond("gamma(T-s)>2", gamma_gt(&rest, 2)),
        cond("T-s out-quadrangular", is_out_quadrangular(&rest)),
        cond("delta+(T-s)>=2", rest.min_out_degree() >= 2),
    ]
}

fn receiver_only_conditions(t: &Tournament, r: usize) -> Vec<Condition> {
    let rest = t.without(&[r]).expect("n >= 3");
    alloc::vec![
        cond("gamma((T-t)^r)>2", gamma_gt(&rest.dual(), 2)),
        cond("T-t in-quadrangular", is_in_quadrangular(&rest)),
        cond("delta-(T-t)>=2", rest.min_in_degree() >= 2),
    ]
}

fn not_strong_conditions(t: &Tournament) -> Vec<Condition> {
    let dec = t.strong_decomposition();
    let first = t.induced(dec.initial().iter().copied()).expect("nonempty component");
    let last = t.induced(dec.terminal().iter().copied()).expect("nonempty component");
    alloc::vec![
        cond("T_1 in-quadrangular", is_in_quadrangular(&first)),
        cond("delta-(T_1)>=2", first.min_in_degree() >= 2),
        cond("T_m out-quadrangular", is_out_quadrangular(&last)),
        cond("delta+(T_m)>=2", last.min_out_degree() >= 2),
    ]
}

fn everything_but(n: usize, x: usize, y: usize) -> VertexSet {
    let mut s = VertexSet::full(n);
    s.remove(x);
    s.remove(y);
    s
}

fn remainder_conditions(t: &Tournament, x: usize, y: usize) -> [Condition; 4] {
    let rest = t.without(&[x, y]).expect("n >= 4");
    [
        cond("gamma(T-{x,y})>2", gamma_gt(&rest, 2)),
        cond("gamma((T-{x,y})^r)>2", gamma_gt(&rest.dual(), 2)),
        cond("delta+(T-{x,y})>=2", rest.min_out_degree() >= 2),
        cond("delta-(T-{x,y})>=2", rest.min_in_degree() >= 2),
    ]
}

/// `x` has out-degree 1 and `x → y`.
fn out_degree_one_conditions(t: &Tournament, x: usize) -> Vec<Condition> {
    let y = t.out_set(x).iter().next().expect("out-degree 1");
    let mut cs = alloc::vec![cond(
        "O(y)=V-{x,y}",
        t.out_set(y) == everything_but(t.n(), x, y)
    )];
    cs.extend(remainder_conditions(t, x, y));
    cs
}

/// `x` has in-degree 1 and `y → x`.
fn in_degree_one_conditions(t: &Tournament, x: usize) -> Vec<Condition> {
    let y = t.in_set(x).iter().next().expect("in-degree 1");
    let mut cs = alloc::vec![cond(
        "I(y)=V-{x,y}",
        t.in_set(y) == everything_but(t.n(), x, y)
    )];
    cs.extend(remainder_conditions(t, x, y));
    cs
}

fn out_degree_one_vertices(t: &Tournament) -> impl Iterator<Item = usize> + '_ {
    (0..t.n()).filter(|&v| t.out_degree(v) == 1)
}

fn in_degree_one_vertices(t: &Tournament) -> impl Iterator<Item = usize> + '_ {
    (0..t.n()).filter(|&v| t.in_degree(v) == 1)
}

/// Decides quadrangularity by the first matching structural rule.
pub fn classify(t: &Tournament) -> ClassificationTrace {
    let n = t.n();
    let trace = |rule, conditions: Vec<Condition>| {
        let verdict = all_hold(&conditions);
        ClassificationTrace {
            rule,
            conditions,
            verdict,
        }
    };
    if n <= 2 {
        return trace(Rule::TrivialSmall, Vec::new());
    }
    let sv = t.special_vertices();
    match (sv.transmitter, sv.receiver) {
        (Some(s), Some(r)) => {
            return trace(Rule::TransmitterReceiver, transmitter_receiver_conditions(t, s, r))
        }
        (Some(s), None) => return trace(Rule::TransmitterOnly, transmitter_only_conditions(t, s)),
        (None, Some(r)) => return trace(Rule::ReceiverOnly, receiver_only_conditions(t, r)),
        (None, None) => {}
    }
    if !t.strong_decomposition().is_strong() {
        return trace(Rule::NotStrong, not_strong_conditions(t));
    }
    if n >= 4 {
        if let Some(x) = out_degree_one_vertices(t).next() {
            return trace(Rule::OutDegreeOne, out_degree_one_conditions(t, x));
        }
        if let Some(x) = in_degree_one_vertices(t).next() {
            return trace(Rule::InDegreeOne, in_degree_one_conditions(t, x));
        }
    }
    if t.is_regular() {
        let big_gamma = gamma_gt(t, 3);
        let mut conditions = alloc::vec![cond("gamma(T)>=4", big_gamma)];
        let verdict = big_gamma || {
            let out = is_out_quadrangular(t);
            conditions.push(cond("T out-quadrangular", out));
            out
        };
        return ClassificationTrace {
            rule: Rule::Regular,
            conditions,
            verdict,
        };
    }
    trace(
        Rule::DirectOracle,
        alloc::vec![
            cond("T out-quadrangular", is_out_quadrangular(t)),
            cond("T in-quadrangular", is_in_quadrangular(t)),
        ],
    )
}

fn require(ok: bool, hypothesis: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::HypothesisNotSatisfied(hypothesis))
    }
}

/// Transmitter and receiver on at least 3 vertices.
pub fn verify_transmitter_receiver(t: &Tournament) -> Result<bool> {
    let sv = t.special_vertices();
    require(
        t.n() >= 3 && sv.transmitter.is_some() && sv.receiver.is_some(),
        "transmitter and receiver on at least 3 vertices",
    )?;
    let cs = transmitter_receiver_conditions(t, sv.transmitter.unwrap(), sv.receiver.unwrap());
    Ok(all_hold(&cs) == is_quadrangular(t))
}

pub fn verify_transmitter_only(t: &Tournament) -> Result<bool> {
    let sv = t.special_vertices();
    require(
        sv.transmitter.is_some() && sv.receiver.is_none(),
        "transmitter and no receiver",
    )?;
    let cs = transmitter_only_conditions(t, sv.transmitter.unwrap());
    Ok(all_hold(&cs) == is_quadrangular(t))
}

pub fn verify_receiver_only(t: &Tournament) -> Result<bool> {
    let sv = t.special_vertices();
    require(
        sv.receiver.is_some() && sv.transmitter.is_none(),
        "receiver and no transmitter",
    )?;
    let cs = receiver_only_conditions(t, sv.receiver.unwrap());
    Ok(all_hold(&cs) == is_quadrangular(t))
}

pub fn verify_not_strong(t: &Tournament) -> Result<bool> {
    let sv = t.special_vertices();
    require(
        sv.transmitter.is_none()
            && sv.receiver.is_none()
            && !t.strong_decomposition().is_strong(),
        "not strongly connected, no transmitter or receiver",
    )?;
    Ok(all_hold(&not_strong_conditions(t)) == is_quadrangular(t))
}

/// Checked for every vertex of out-degree 1, not just the first.
pub fn verify_outdeg_one(t: &Tournament) -> Result<bool> {
    let xs: Vec<usize> = out_degree_one_vertices(t).collect();
    require(
        t.n() >= 4 && !xs.is_empty(),
        "vertex of out-degree 1 on at least 4 vertices",
    )?;
    let quad = is_quadrangular(t);
    Ok(xs
        .iter()
        .all(|&x| all_hold(&out_degree_one_conditions(t, x)) == quad))
}

pub fn verify_indeg_one(t: &Tournament) -> Result<bool> {
    let xs: Vec<usize> = in_degree_one_vertices(t).collect();
    require(
        t.n() >= 4 && !xs.is_empty(),
        "vertex of in-degree 1 on at least 4 vertices",
    )?;
    let quad = is_quadrangular(t);
    Ok(xs
        .iter()
        .all(|&x| all_hold(&in_degree_one_conditions(t, x)) == quad))
}

/// In a quadrangular tournament, `O(x) = {y}` forces `O(y) = V - {x, y}`
/// and `I(x) = {y}` forces `I(y) = V - {x, y}`.
pub fn verify_degree_lemmas(t: &Tournament) -> Result<bool> {
    let n = t.n();
    let outs: Vec<usize> = out_degree_one_vertices(t).collect();
    let ins: Vec<usize> = in_degree_one_vertices(t).collect();
    require(
        (!outs.is_empty() || !ins.is_empty()) && is_quadrangular(t),
        "quadrangular with a vertex of out- or in-degree 1",
    )?;
    let out_ok = outs.iter().all(|&x| {
        let y = t.out_set(x).iter().next().unwrap();
        t.out_set(y) == everything_but(n, x, y)
    });
    let in_ok = ins.iter().all(|&x| {
        let y = t.in_set(x).iter().next().unwrap();
        t.in_set(y) == everything_but(n, x, y)
    });
    Ok(out_ok && in_ok)
}

/// Sub-tournaments on outsets (insets) of an out- (in-) quadrangular
/// tournament have no vertex of out- (in-) degree 1, and minimum degree 2
/// on a quadrangular side forces minimum degree 4.
///
/// Implications whose hypotheses fail hold vacuously.
pub fn verify_subtournament_degrees(t: &Tournament) -> bool {
    let out_q = is_out_quadrangular(t);
    let in_q = is_in_quadrangular(t);
    let sub_ok = |set: VertexSet, want_out: bool| {
        if set.is_empty() {
            return true;
        }
        let w = t.induced(set.iter()).expect("nonempty");
        (0..w.n()).all(|v| {
            let d = if want_out { w.out_degree(v) } else { w.in_degree(v) };
            d != 1
        })
    };
    let n = t.n();
    let outsets_ok = !out_q || (0..n).all(|v| sub_ok(t.out_set(v), true));
    let insets_ok = !in_q || (0..n).all(|v| sub_ok(t.in_set(v), false));
    let dp = t.min_out_degree();
    let dm = t.min_in_degree();
    let out_cor = !(out_q && dp >= 2) || dp >= 4;
    let in_cor = !(in_q && dm >= 2) || dm >= 4;
    let both_cor = !(out_q && in_q && dp >= 2 && dm >= 2) || (dp >= 4 && dm >= 4);
    outsets_ok && insets_ok && out_cor && in_cor && both_cor
}

/// For regular `T`: out-, in- and two-sided quadrangularity coincide, and
/// `γ(T) >= 4` forces out-quadrangularity.
pub fn verify_regular(t: &Tournament) -> Result<bool> {
    if !t.is_regular() {
        return Err(Error::NotRegular);
    }
    let out = is_out_quadrangular(t);
    let inn = is_in_quadrangular(t);
    let both = out && inn;
    let equivalence = out == inn && inn == both;
    let sufficiency = !gamma_gt(t, 3) || out;
    Ok(equivalence && sufficiency)
}

/// A rotational tournament is isomorphic to `U_n` or has pairwise
/// intersecting outsets; a quadrangular one on more than 3 vertices always
/// has pairwise intersecting outsets.
pub fn verify_rotational_dichotomy(t: &Tournament, sym: &Symbol) -> Result<bool> {
    require(
        *t == rotational(sym),
        "tournament is the rotational tournament of the symbol",
    )?;
    let n = t.n();
    let all_meet = (0..n).all(|u| {
        (u + 1..n).all(|v| bits::and_count(t.row(u), t.row(v)) > 0)
    });
    let dichotomy = all_meet || t.is_isomorphic(&u_n(n)?)?;
    let corollary = !(is_quadrangular(t) && n > 3) || all_meet;
    Ok(dichotomy && corollary)
}

/// One entry of the verification catalogue used by corpus sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Classify,
    TransmitterReceiver,
    TransmitterOnly,
    ReceiverOnly,
    NotStrong,
    OutDegreeOne,
    InDegreeOne,
    DegreeLemmas,
    SubtournamentDegrees,
    Regular,
    ClosedUnion,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Classify,
        Check::TransmitterReceiver,
        Check::TransmitterOnly,
        Check::ReceiverOnly,
        Check::NotStrong,
        Check::OutDegreeOne,
        Check::InDegreeOne,
        Check::DegreeLemmas,
        Check::SubtournamentDegrees,
        Check::Regular,
        Check::ClosedUnion,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::Classify => "classify",
            Check::TransmitterReceiver => "transmitter-receiver",
            Check::TransmitterOnly => "transmitter-only",
            Check::ReceiverOnly => "receiver-only",
            Check::NotStrong => "not-strong",
            Check::OutDegreeOne => "out-degree-one",
            Check::InDegreeOne => "in-degree-one",
            Check::DegreeLemmas => "degree-lemmas",
            Check::SubtournamentDegrees => "subtournament-degrees",
            Check::Regular => "regular",
            Check::ClosedUnion => "closed-union",
        }
    }

    /// `None` when the hypothesis does not apply to `t`, otherwise whether
    /// the characterization agrees with the direct definition.
    pub fn run(self, t: &Tournament) -> Option<bool> {
        let applicable = |r: Result<bool>| match r {
            Ok(b) => Some(b),
            Err(Error::HypothesisNotSatisfied(_)) | Err(Error::NotRegular) => None,
            Err(e) => panic!("unexpected verifier error: {e}"),
        };
        match self {
            Check::Classify => Some(classify(t).verdict == is_quadrangular(t)),
            Check::TransmitterReceiver => applicable(verify_transmitter_receiver(t)),
            Check::TransmitterOnly => applicable(verify_transmitter_only(t)),
            Check::ReceiverOnly => applicable(verify_receiver_only(t)),
            Check::NotStrong => applicable(verify_not_strong(t)),
            Check::OutDegreeOne => applicable(verify_outdeg_one(t)),
            Check::InDegreeOne => applicable(verify_indeg_one(t)),
            Check::DegreeLemmas => applicable(verify_degree_lemmas(t)),
            Check::SubtournamentDegrees => Some(verify_subtournament_degrees(t)),
            Check::Regular => applicable(verify_regular(t)),
            Check::ClosedUnion => Some(
                crate::orthogonality::closed_union_in_quad(t) == is_in_quadrangular(t),
            ),
        }
    }
}
