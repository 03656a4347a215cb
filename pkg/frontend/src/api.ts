// Typed client for the wiki's JSON API. Every UI feature goes through these
// calls; nothing in the client re-derives statuses or answers.

export type Prediction = {
  function_words: string[];
  categories: string[];
};

export type WordForms = Record<string, string>;

export type WordView = {
  lemma: string;
  word_class: string;
  forms: WordForms;
};

export type StatementView = {
  id: number;
  article: string;
  kind: "sentence" | "comment";
  text: string;
  tokens: string[];
  status: "ok" | "nonowl" | "conflict" | "comment";
  reason?: string;
};

export type ArticleView = {
  word: string;
  statements: StatementView[];
};

export type WordsView = {
  words: WordView[];
  categories: Record<string, string[]>;
};

export type AskView =
  | { kind: "wh"; individuals: string[]; sentences: string[] }
  | { kind: "yn"; verdict: "yes" | "no" | "unknown" }
  | { kind: "red"; reason: string };

export type ApiError = {
  code: string;
  message: string;
  position?: number;
  prediction?: Prediction;
};

export class WikiApiError extends Error {
  constructor(readonly payload: ApiError, readonly status: number) {
    super(payload.message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let payload: ApiError;
    try {
      payload = (await response.json()) as ApiError;
    } catch {
      payload = { code: "transport", message: response.statusText };
    }
    throw new WikiApiError(payload, response.status);
  }
  return (await response.json()) as T;
}

export const api = {
  words(): Promise<WordsView> {
    return request("/api/words");
  },

  addWord(word_class: string, lemma: string, forms: WordForms): Promise<unknown> {
    return request("/api/words", {
      method: "POST",
      body: JSON.stringify({ word_class, lemma, forms }),
    });
  },

  article(lemma: string): Promise<ArticleView> {
    return request(`/api/articles/${encodeURIComponent(lemma)}`);
  },

  addStatement(lemma: string, tokens: string[]): Promise<StatementView> {
    return request(`/api/articles/${encodeURIComponent(lemma)}/statements`, {
      method: "POST",
      body: JSON.stringify({ tokens }),
    });
  },

  removeStatement(lemma: string, id: number): Promise<unknown> {
    return request(
      `/api/articles/${encodeURIComponent(lemma)}/statements/${id}`,
      { method: "DELETE" },
    );
  },

  reassertStatement(lemma: string, id: number): Promise<StatementView> {
    return request(
      `/api/articles/${encodeURIComponent(lemma)}/statements/${id}/reassert`,
      { method: "POST" },
    );
  },

  predict(prefix: string[]): Promise<Prediction> {
    const joined = prefix.map(encodeURIComponent).join("+");
    return request(`/api/predict?prefix=${joined}`);
  },

  ask(tokens: string[]): Promise<AskView> {
    return request("/api/ask", {
      method: "POST",
      body: JSON.stringify({ tokens }),
    });
  },

  hierarchy(): Promise<{ sentences: string[] }> {
    return request("/api/hierarchy");
  },

  individualClasses(lemma: string): Promise<{ sentences: string[] }> {
    return request(`/api/individuals/${encodeURIComponent(lemma)}/classes`);
  },
};
