use ladders_core::oracle::hook_length_count;
use ladders_core::specht::component_ladders;
use ladders_core::{
    bitableau_of, bz_derivative, c_prime_tuple, c_tuple, column_removal_check, content_multi,
    gamma_descriptor, is_proper, is_restricted, multiseg_of, pad, phi_multiseg, residue_sequence,
    rsk_transform, single_derivative, specht_rsk_verify, standard_tableaux, InvertedSsyt,
    Multicharge, Multipartition, Multisegment, Partition,
};
use serde_json::{json, Value};

use crate::args::{Command, DeriveArgs, RskArgs, SpechtArgs, TableauxArgs};
use crate::checks;
use crate::report::{CommandReport, Status};

pub fn run(command: &Command) -> CommandReport {
    let result = match command {
        Command::Rsk(a) => rsk(a),
        Command::Derive(a) => derive(a),
        Command::Specht(a) => specht(a),
        Command::Tableaux(a) => tableaux(a),
        Command::Check(a) => return checks::run(a),
    };
    result.unwrap_or_else(|report| report)
}

type Outcome = Result<CommandReport, CommandReport>;

fn parse<T: std::str::FromStr<Err = ladders_core::ParseError>>(
    s: &str,
) -> Result<T, CommandReport> {
    s.parse::<T>().map_err(CommandReport::from)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

fn tableau_line(t: &InvertedSsyt) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn rsk(a: &RskArgs) -> Outcome {
    let m: Multisegment = parse(&a.input)?;
    let ladders = rsk_transform(&m)?;
    let mut payload = json!({ "input": to_value(&m), "ladders": to_value(&ladders) });
    let mut lines = vec![if ladders.is_empty() {
        "(empty)".to_string()
    } else {
        ladders.to_string()
    }];
    if a.width {
        payload["width"] = json!(ladders.len());
        lines.push(format!("width: {}", ladders.len()));
    }
    if a.bitableau {
        let pq = bitableau_of(&m)?;
        lines.push(format!("P: {}", tableau_line(pq.p())));
        lines.push(format!("Q: {}", tableau_line(pq.q())));
        payload["bitableau"] = to_value(&pq);
    }
    Ok(CommandReport::ok(payload, lines))
}

fn derive(a: &DeriveArgs) -> Outcome {
    let ms = a
        .inputs
        .iter()
        .map(|s| parse::<Multisegment>(s))
        .collect::<Result<Vec<_>, _>>()?;
    if a.phi {
        let c = c_tuple(&ms);
        let cp = c_prime_tuple(&ms);
        let phi = phi_multiseg(&ms);
        let payload = json!({ "inputs": to_value(&ms), "c": c, "c_prime": cp, "phi": phi });
        return Ok(CommandReport::ok(
            payload,
            vec![format!("Phi = {phi} (C = {c}, C' = {cp})")],
        ));
    }
    let [m] = ms.as_slice() else {
        return Err(CommandReport::failure(
            Status::ParseError,
            format!(
                "expected one multisegment, got {} (several are only accepted with --phi)",
                ms.len()
            ),
        ));
    };
    if a.gamma_descriptor || a.derived {
        let g = gamma_descriptor(m, a.derived)?;
        let lines = vec![
            format!("ladders: {}", g.ladders),
            format!("shift: {}", g.shift),
        ];
        let payload =
            json!({ "input": to_value(m), "derived": a.derived, "descriptor": to_value(&g) });
        return Ok(CommandReport::ok(payload, lines));
    }
    let (result, payload) = if let Some(t) = a.bz {
        let r = bz_derivative(m, t)?;
        (
            r.clone(),
            json!({ "input": to_value(m), "bz": t, "result": to_value(&r) }),
        )
    } else if let Some(j) = a.single {
        let r = single_derivative(m, j)?;
        (
            r.clone(),
            json!({ "input": to_value(m), "single": j, "result": to_value(&r) }),
        )
    } else {
        let r = m.derive();
        (
            r.clone(),
            json!({ "input": to_value(m), "result": to_value(&r) }),
        )
    };
    Ok(CommandReport::ok(payload, vec![result.to_string()]))
}

fn specht(a: &SpechtArgs) -> Outcome {
    let kappa: Multicharge = parse(&a.charge)?;
    let mp: Multipartition = parse(&a.parts)?;
    let restricted = is_restricted(&kappa, &mp)?;
    let proper = is_proper(&kappa, &mp)?;
    let m = multiseg_of(&kappa, &mp)?;
    let mut payload = json!({
        "charge": to_value(&kappa),
        "parts": to_value(&mp),
        "restricted": restricted,
        "proper": proper,
        "multisegment": to_value(&m),
        "content": to_value(&content_multi(&kappa, &mp)?),
        "component_ladders": to_value(&component_ladders(&kappa, &mp)?),
    });
    let mut lines = vec![
        format!("restricted: {restricted}"),
        format!("proper: {proper}"),
        format!("multisegment: {m}"),
    ];
    if a.pad {
        let padded = pad(&kappa, &mp)?;
        lines.push(format!("padded: {padded}"));
        payload["padded"] = to_value(&padded);
    }
    if a.derive {
        let removed = mp.derived();
        let ok = column_removal_check(&kappa, &mp)?;
        lines.push(format!("first columns removed: {removed}"));
        lines.push(format!(
            "column removal check: {}",
            if ok { "pass" } else { "FAIL" }
        ));
        payload["derived"] = to_value(&removed);
        payload["column_removal_check"] = json!(ok);
        if !ok {
            let mut r = CommandReport::ok(payload, lines);
            r.status = Status::CheckFailure;
            r.diagnostics.push(format!(
                "counterexample: charge {:?}, parts {mp}: derivative of {m} differs from the multisegment of {removed}",
                kappa.charges()
            ));
            return Err(r);
        }
    }
    if a.verify_rsk {
        let report = specht_rsk_verify(&kappa, &mp)?;
        lines.push(format!("gamma: {}", report.gamma));
        lines.push(format!("antiderivative: {}", report.antiderivative));
        lines.push(format!("ladders: {}", report.ladders));
        lines.push("checks: pass".to_string());
        payload["verify_rsk"] = to_value(&report);
    }
    Ok(CommandReport::ok(payload, lines))
}

fn tableaux(a: &TableauxArgs) -> Outcome {
    let shape: Partition = parse(&a.shape)?;
    let st = standard_tableaux(&shape);
    let hooks = hook_length_count(&shape);
    let mut lines = vec![
        format!("shape: {shape}"),
        format!(
            "standard tableaux: {} (hook length formula: {hooks})",
            st.len()
        ),
        format!("a: {}", shape.a_invariant()),
    ];
    let mut listing = Vec::with_capacity(st.len());
    for t in &st {
        let rows = t.rows();
        let mut entry = json!({ "rows": rows });
        let mut line = rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ");
        if let Some(k) = a.k {
            let res = residue_sequence(k, t);
            line.push_str(&format!("  residues {res:?}"));
            entry["residues"] = json!(res);
        }
        lines.push(line);
        listing.push(entry);
    }
    let payload = json!({
        "shape": to_value(&shape),
        "count": st.len(),
        "hook_length_count": hooks.to_string(),
        "a_invariant": shape.a_invariant(),
        "tableaux": listing,
    });
    Ok(CommandReport::ok(payload, lines))
}
