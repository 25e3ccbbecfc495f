import { describe, expect, it } from "vitest";

import { searchElements } from "../src/search.js";
import { plantOntology } from "./fixtures.js";

describe("searchElements", () => {
  const onto = plantOntology();

  it("matches labels case-insensitively", () => {
    const hits = searchElements(onto, "WIND TURBINE");
    expect(hits[0]).toMatchObject({ kind: "concept", target: "wind_turbine", matchedOn: "label" });
  });

  it("matches synonyms and abbreviations", () => {
    const hits = searchElements(onto, "wtg");
    expect(hits[0]).toMatchObject({ target: "wind_turbine", matchedOn: "synonym" });
  });

  it("finds elements by substring", () => {
    const targets = searchElements(onto, "wind").map((hit) => hit.target);
    expect(targets).toContain("wind_turbine");
    expect(targets).toContain("wind_power_plant");
    expect(targets).toContain("wind_speed");
  });

  it("ranks exact matches before substring matches", () => {
    const hits = searchElements(onto, "rotor");
    expect(hits[0].target).toBe("rotor");
  });

  it("ranks concepts before properties", () => {
    // "capacity" only matches the property; "w" matches both kinds
    const hits = searchElements(onto, "a");
    const kinds = hits.map((hit) => hit.kind);
    const firstProperty = kinds.indexOf("property");
    const lastConcept = kinds.lastIndexOf("concept");
    expect(firstProperty === -1 || lastConcept < firstProperty).toBe(true);
  });

  it("reaches property names and property synonyms", () => {
    expect(searchElements(onto, "installed capacity")[0]).toMatchObject({
      kind: "property",
      target: "wind_power_plant#installed capacity",
      matchedOn: "property",
    });
    expect(searchElements(onto, "nameplate capacity")[0]).toMatchObject({
      target: "wind_power_plant#installed capacity",
      matchedOn: "property-synonym",
    });
  });

  it("returns nothing for blank queries", () => {
    expect(searchElements(onto, "   ")).toEqual([]);
  });
});
