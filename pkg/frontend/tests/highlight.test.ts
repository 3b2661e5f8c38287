import { describe, expect, it } from "vitest";

import { escapeHtml, highlightSegments, termWords } from "../src/highlight.js";

describe("escapeHtml", () => {
  it("escapes markup-significant characters", () => {
    expect(escapeHtml(`<b>&"quote"'s</b>`)).toBe(
      "&lt;b&gt;&amp;&quot;quote&quot;&#39;s&lt;/b&gt;",
    );
  });

  it("leaves plain text alone", () => {
    expect(escapeHtml("fundamental rights")).toBe("fundamental rights");
  });
});

describe("termWords", () => {
  it("splits keys into distinct lowercased words, longest first", () => {
    expect(termWords(["fundamental_rights", "rights_violation"])).toEqual([
      "fundamental",
      "violation",
      "rights",
    ]);
  });

  it("handles empty input", () => {
    expect(termWords([])).toEqual([]);
  });
});

describe("highlightSegments", () => {
  const join = (head: string, keys: string[]) =>
    highlightSegments(head, keys).map((s) => s.text).join("");

  it("marks every occurrence of a term word, case-insensitively", () => {
    const segments = highlightSegments(
      "Fundamental rights violated - fundamental rights chapter",
      ["fundamental_rights"],
    );
    const marked = segments.filter((s) => s.marked).map((s) => s.text);
    expect(marked).toEqual(["Fundamental", "rights", "fundamental", "rights"]);
  });

  it("reassembles to the original head", () => {
    const head = "Unlawful arrest of trade union leader";
    expect(join(head, ["unlawful_arrest", "union_leader"])).toBe(head);
  });

  it("matches whole words only", () => {
    const segments = highlightSegments("rights and righteousness", ["fundamental_rights"]);
    const marked = segments.filter((s) => s.marked).map((s) => s.text);
    expect(marked).toEqual(["rights"]);
  });

  it("does not mark a word inside a hyphenated token", () => {
    const segments = highlightSegments("the plaintiff-respondent appeared", ["plaintiff_claim"]);
    expect(segments.every((s) => !s.marked)).toBe(true);
  });

  it("marks hyphenated term words as a whole", () => {
    const segments = highlightSegments("the plaintiff-respondent appeared", [
      "plaintiff-respondent_appeal",
    ]);
    const marked = segments.filter((s) => s.marked).map((s) => s.text);
    expect(marked).toEqual(["plaintiff-respondent"]);
  });

  it("returns a single unmarked segment when nothing matches", () => {
    expect(highlightSegments("no overlap here", ["gold_jewellery"])).toEqual([
      { text: "no overlap here", marked: false },
    ]);
  });

  it("handles empty head and empty terms", () => {
    expect(highlightSegments("", ["a_b"])).toEqual([]);
    expect(highlightSegments("head text", [])).toEqual([
      { text: "head text", marked: false },
    ]);
  });
});
