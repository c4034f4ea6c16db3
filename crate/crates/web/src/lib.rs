//! Browser bindings. Every function takes and returns JSON text in the same
//! formats as the command-line tool.

use horocoh::bwb::{bwb_solve, FlagBundle};
use horocoh::fan_toric::{toric_cohomology_with, validate_fan, Caps};
use horocoh::horospherical::{horo_cohomology_with, HorosphericalModel};
use horocoh::schema::{parse_input, FanFile, InputFile, ModelFile};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn fan_file(text: &str) -> Result<FanFile, String> {
    match parse_input(text).map_err(|e| e.to_string())? {
        InputFile::Fan(f) => Ok(f),
        InputFile::Model(_) => Err("expected a fan file".into()),
    }
}

fn model_file(text: &str) -> Result<ModelFile, String> {
    match parse_input(text).map_err(|e| e.to_string())? {
        InputFile::Model(m) => Ok(m),
        InputFile::Fan(_) => Err("expected a model file with `root_type`".into()),
    }
}

fn checked(fan: &horocoh::Fan) -> Result<(), String> {
    validate_fan(fan).map_err(|vs| {
        vs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    })
}

fn caps() -> Caps {
    Caps {
        max_rays: 10,
        max_box_points: 1_000_000,
    }
}

pub fn toric_json(fan_text: &str) -> Result<String, String> {
    let file = fan_file(fan_text)?;
    let fan = file.fan();
    checked(&fan)?;
    let divisor = file.divisor().map_err(|e| e.to_string())?;
    let table = toric_cohomology_with(&fan, &divisor, caps()).map_err(|e| e.to_string())?;
    serde_json::to_string(&table).map_err(|e| e.to_string())
}

pub fn bwb_json(model_text: &str) -> Result<String, String> {
    let file = model_file(model_text)?;
    let datum = file.datum().map_err(|e| e.to_string())?;
    let spec = file.spec(&datum).map_err(|e| e.to_string())?;
    let flag_dim = datum.flag_dimension(&spec);
    let bundle =
        FlagBundle::new(datum, spec, file.divisor.colors.clone()).map_err(|e| e.to_string())?;
    let result = bwb_solve(&bundle).map_err(|e| e.to_string())?;
    let weight = bundle.weight();
    serde_json::to_string(
        &json!({ "weight": weight, "flag_dimension": flag_dim, "result": result }),
    )
    .map_err(|e| e.to_string())
}

pub fn horo_json(model_text: &str) -> Result<String, String> {
    let file = model_file(model_text)?;
    let datum = file.datum().map_err(|e| e.to_string())?;
    let spec = file.spec(&datum).map_err(|e| e.to_string())?;
    let fan = file.fan();
    checked(&fan)?;
    let model = HorosphericalModel::new(datum, spec, fan).map_err(|e| e.to_string())?;
    let report =
        horo_cohomology_with(&model, &file.divisor(), caps()).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Graded cohomology table of the fan file's divisor.
#[wasm_bindgen(js_name = toricCohomology)]
pub fn toric_cohomology(fan_text: &str) -> Result<String, JsError> {
    toric_json(fan_text).map_err(|e| JsError::new(&e))
}

/// Borel–Weil–Bott on the flag factor of a model file.
#[wasm_bindgen(js_name = bwbSolve)]
pub fn bwb(model_text: &str) -> Result<String, JsError> {
    bwb_json(model_text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = horoCohomology)]
pub fn horo(model_text: &str) -> Result<String, JsError> {
    horo_json(model_text).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toric_table_for_p2() {
        let out = toric_json(r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]],"divisor":[1,0,0]}"#).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["totals"], json!([3, 0, 0]));
    }

    #[test]
    fn bwb_on_p2() {
        let out =
            bwb_json(r#"{"root_type":"A2","levi_set":[2],"divisor":{"colors":{"1":-3}}}"#).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["degree"], 2);
        assert_eq!(v["flag_dimension"], 2);
    }

    #[test]
    fn horo_model() {
        let out = horo_json(
            r#"{"root_type":"A1","levi_set":[],"fan":{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]},
                "divisor":{"colors":{"1":-3},"boundary":[-2,0]}}"#,
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degrees"][2]["total_dim"], 2);
    }

    #[test]
    fn errors_are_messages() {
        assert!(toric_json("{").unwrap_err().contains("JSON"));
        let bad = r#"{"dim":2,"rays":[[1,0],[1,2],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]],"divisor":[0,0,0]}"#;
        assert!(toric_json(bad)
            .unwrap_err()
            .contains("smoothness violation"));
    }
}
