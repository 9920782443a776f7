use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::json;

use queer_howe_py::to_py;

#[test]
fn json_values_become_python_objects() {
    Python::initialize();
    Python::attach(|py| {
        let v = json!({"suite": "howe", "ok": true, "dims": [1, 2, -3], "x": 0.5, "none": null});
        let obj = to_py(py, &v).unwrap();
        let d = obj.cast::<PyDict>().unwrap();
        assert_eq!(d.get_item("suite").unwrap().unwrap().extract::<String>().unwrap(), "howe");
        assert!(d.get_item("ok").unwrap().unwrap().extract::<bool>().unwrap());
        let dims = d.get_item("dims").unwrap().unwrap();
        let dims = dims.cast::<PyList>().unwrap();
        assert_eq!(dims.extract::<Vec<i64>>().unwrap(), vec![1, 2, -3]);
        assert_eq!(d.get_item("x").unwrap().unwrap().extract::<f64>().unwrap(), 0.5);
        assert!(d.get_item("none").unwrap().unwrap().is_none());
    });
}
