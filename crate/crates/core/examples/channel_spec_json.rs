//! Channel specifications as JSON, including a raw Kraus set, and the
//! diagnostics produced for invalid ones.

use capdetect::detect::{detect_capacity, DetectionConfig};
use capdetect::spec::{parse_channel_spec, ChannelSpec};

fn main() -> capdetect::Result<()> {
    let spec = parse_channel_spec(r#"{"kind":"gad","params":{"gamma":0.36,"p":1.0}}"#)?;
    let channel = spec.build()?;
    println!("{} with {} Kraus operators", spec.kind(), channel.operators().len());

    // any channel can be written back out as an explicit Kraus set
    let text = serde_json::to_string(&ChannelSpec::from_channel(&channel)).expect("serializable");
    let again = parse_channel_spec(&text)?.build()?;
    let c = detect_capacity(&again, &DetectionConfig::pauli())?;
    println!("C_DET from the Kraus document = {:.9}", c.c_det_bits);

    for bad in [
        r#"{"kind":"stretched","params":{"gamma":0.5,"s":0.8}}"#,
        r#"{"kind":"pauli","params":{"px":0.6,"py":0.6,"pz":0.0}}"#,
        r#"{"kind":"kraus","params":{"dim":2,"operators":[[[1,0],[0,0],[0,0],[1,0]],[[0,0],[1,0],[0,0],[0,0]]]}}"#,
    ] {
        println!("rejected: {}", parse_channel_spec(bad).unwrap_err());
    }
    Ok(())
}
