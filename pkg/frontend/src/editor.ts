// The step-by-step sentence editor. At every position the user can pick
// only from the tokens the grammar allows there, so the editor physically
// cannot compose an invalid sentence. Each accepted choice is logged with
// the menu it was chosen from; submit() replays that log as a final guard.

import type { Prediction } from "./api";

export type CategoryIndex = Record<string, string[]>;

export interface PredictSource {
  (prefix: string[]): Promise<Prediction>;
}

export type EditorChoice = {
  token: string;
  offered: string[];
};

export class TokenNotOfferedError extends Error {
  constructor(token: string) {
    super(`"${token}" is not possible at this position`);
  }
}

export class SentenceEditor {
  readonly tokens: string[] = [];
  prediction: Prediction = { function_words: [], categories: [] };
  private readonly log: EditorChoice[] = [];

  constructor(
    private readonly predict: PredictSource,
    private categories: CategoryIndex,
    private numbers: number[] = [1, 2, 3],
  ) {}

  async start(): Promise<void> {
    this.prediction = await this.predict([]);
  }

  // vocabulary can grow while editing; the menus follow it on refresh
  setCategories(categories: CategoryIndex): void {
    this.categories = categories;
  }

  options(): string[] {
    const offered: string[] = [...this.prediction.function_words];
    for (const category of this.prediction.categories) {
      if (category === "number") {
        offered.push(...this.numbers.map(String));
      } else {
        offered.push(...(this.categories[category] ?? []));
      }
    }
    return [...new Set(offered)].sort();
  }

  categoryOptions(): Record<string, string[]> {
    const menus: Record<string, string[]> = {};
    if (this.prediction.function_words.length > 0) {
      menus["function words"] = [...this.prediction.function_words].sort();
    }
    for (const category of this.prediction.categories) {
      menus[category] =
        category === "number"
          ? this.numbers.map(String)
          : [...(this.categories[category] ?? [])].sort();
    }
    return menus;
  }

  complete(): boolean {
    const last = this.tokens[this.tokens.length - 1];
    return last === "." || last === "?";
  }

  async choose(token: string): Promise<void> {
    const offered = this.options();
    if (!offered.includes(token)) {
      throw new TokenNotOfferedError(token);
    }
    this.tokens.push(token);
    this.log.push({ token, offered });
    this.prediction = await this.predict(this.tokens);
  }

  async backspace(): Promise<void> {
    if (this.tokens.length === 0) return;
    this.tokens.pop();
    this.log.pop();
    this.prediction = await this.predict(this.tokens);
  }

  async clear(): Promise<void> {
    this.tokens.length = 0;
    this.log.length = 0;
    this.prediction = await this.predict([]);
  }

  // a vocabulary change under our feet may invalidate the visible menu
  async refresh(): Promise<void> {
    this.prediction = await this.predict(this.tokens);
  }

  choiceLog(): readonly EditorChoice[] {
    return this.log;
  }

  submit(): string[] {
    if (!this.complete()) {
      throw new Error("the sentence still needs its final . or ?");
    }
    // replay the log: every submitted token must have been offered at the
    // position it was chosen for
    this.log.forEach((entry, i) => {
      if (entry.token !== this.tokens[i] || !entry.offered.includes(entry.token)) {
        throw new TokenNotOfferedError(entry.token);
      }
    });
    return [...this.tokens];
  }
}
