// The editor can only ever submit grammar-accepted sentences: scripted
// sessions pick random offered tokens against recorded predictions from the
// engine, and every submission must land in the recorded accepted-sentence
// set. The recorded data covers every prefix of every sentence up to 7
// tokens over the demo vocabulary.

import { describe, expect, it } from "vitest";

import { SentenceEditor, TokenNotOfferedError } from "../src/editor";
import type { Prediction } from "../src/api";

import predictionsJson from "./fixtures/predictions.json";
import sentencesJson from "./fixtures/sentences.json";
import vocabularyJson from "./fixtures/vocabulary.json";

const predictions = predictionsJson as Record<string, Prediction>;
const accepted = new Set(sentencesJson as string[]);
const categories = (vocabularyJson as {
  categories: Record<string, string[]>;
  numbers: number[];
}).categories;
const numbers = (vocabularyJson as { numbers: number[] }).numbers;

function recordedPredict(prefix: string[]): Promise<Prediction> {
  const key = prefix.join(" ");
  const hit = predictions[key];
  if (!hit) throw new Error(`no recorded prediction for "${key}"`);
  return Promise.resolve(hit);
}

function inEnvelope(prefix: string[], token: string): boolean {
  return [...prefix, token].join(" ") in predictions;
}

// deterministic small PRNG so failures reproduce
function mulberry32(seed: number): () => number {
  let a = seed;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

async function newEditor(): Promise<SentenceEditor> {
  const editor = new SentenceEditor(recordedPredict, categories, numbers);
  await editor.start();
  return editor;
}

describe("token-source invariant", () => {
  it("random scripted sessions submit only accepted sentences", async () => {
    const rng = mulberry32(20260810);
    let submissions = 0;
    for (let session = 0; session < 400; session++) {
      const editor = await newEditor();
      for (let step = 0; step < 12; step++) {
        if (editor.complete()) break;
        const offered = editor
          .options()
          .filter((t) => inEnvelope(editor.tokens, t));
        expect(offered.length).toBeGreaterThan(0);
        const pick = offered[Math.floor(rng() * offered.length)];
        await editor.choose(pick);
      }
      if (editor.complete()) {
        const tokens = editor.submit();
        submissions++;
        expect(accepted.has(tokens.join(" "))).toBe(true);
        // every submitted token came from the menu shown at its position
        const log = editor.choiceLog();
        expect(log.length).toBe(tokens.length);
        log.forEach((entry, i) => {
          expect(entry.token).toBe(tokens[i]);
          expect(entry.offered).toContain(tokens[i]);
        });
      }
    }
    expect(submissions).toBeGreaterThan(300);
  });

  it("every recorded sentence is composable through the editor", async () => {
    const sample = [...accepted].filter((_, i) => i % 17 === 0);
    for (const sentence of sample) {
      const editor = await newEditor();
      for (const token of sentence.split(" ")) {
        expect(editor.options()).toContain(token);
        await editor.choose(token);
      }
      expect(editor.submit().join(" ")).toBe(sentence);
    }
  });

  it("rejects tokens that were not offered", async () => {
    const editor = await newEditor();
    await expect(editor.choose("borders")).rejects.toBeInstanceOf(
      TokenNotOfferedError,
    );
    await expect(editor.choose("blorf")).rejects.toBeInstanceOf(
      TokenNotOfferedError,
    );
    expect(editor.tokens).toEqual([]);
  });

  it("refuses to submit an unfinished sentence", async () => {
    const editor = await newEditor();
    await editor.choose("every");
    await editor.choose("country");
    expect(() => editor.submit()).toThrow();
  });
});

describe("editor stepping", () => {
  it("expands categories against the vocabulary", async () => {
    const editor = await newEditor();
    await editor.choose("every");
    expect(editor.options()).toEqual(
      [...categories["noun-singular"]].sort(),
    );
    const menus = editor.categoryOptions();
    expect(Object.keys(menus)).toEqual(["noun-singular"]);
  });

  it("offers numbers after a quantity phrase", async () => {
    const editor = await newEditor();
    for (const token of ["switzerland", "borders", "at", "most"]) {
      await editor.choose(token);
    }
    expect(editor.options()).toEqual(["1", "2", "3"]);
  });

  it("backspace pops one token and refetches", async () => {
    const editor = await newEditor();
    await editor.choose("every");
    await editor.choose("country");
    await editor.backspace();
    expect(editor.tokens).toEqual(["every"]);
    expect(editor.options()).toEqual([...categories["noun-singular"]].sort());
  });

  it("a finished sentence only offers submit", async () => {
    const editor = await newEditor();
    for (const token of ["switzerland", "borders", "austria", "."]) {
      await editor.choose(token);
    }
    expect(editor.complete()).toBe(true);
    expect(editor.options()).toEqual([]);
  });

  it("picks up vocabulary growth on refresh", async () => {
    const editor = await newEditor();
    await editor.choose("every");
    editor.setCategories({
      ...categories,
      "noun-singular": [...categories["noun-singular"], "lake"],
    });
    expect(editor.options()).toContain("lake");
  });
});
