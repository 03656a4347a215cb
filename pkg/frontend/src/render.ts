// Pure HTML renderers: every view is a function of API payloads and nothing
// else. The DOM layer in main.ts only injects these strings and wires events.

import type { ArticleView, AskView, StatementView } from "./api";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const BADGES: Record<string, string> = {
  nonowl: "outside reasoner fragment",
  conflict: "contradicts the ontology",
};

export function statementClass(statement: StatementView): string {
  if (statement.status === "ok") return "statement-blue";
  if (statement.status === "comment") return "statement-comment";
  return "statement-red";
}

export function renderStatement(statement: StatementView): string {
  const cls = statementClass(statement);
  const text = escapeHtml(statement.text);
  const parts = [`<li class="statement ${cls}" data-id="${statement.id}">`];
  parts.push(`<span class="statement-text">${text}</span>`);
  if (statement.status === "nonowl" || statement.status === "conflict") {
    const badge = BADGES[statement.status];
    const reason = statement.reason ? `: ${escapeHtml(statement.reason)}` : "";
    parts.push(`<span class="badge badge-${statement.status}">${badge}${reason}</span>`);
  }
  if (statement.kind !== "comment") {
    parts.push(`<button class="remove" data-id="${statement.id}">remove</button>`);
  }
  if (statement.status === "conflict") {
    parts.push(`<button class="reassert" data-id="${statement.id}">reassert</button>`);
  }
  parts.push("</li>");
  return parts.join("");
}

export function renderArticle(article: ArticleView): string {
  const rows = article.statements.map(renderStatement).join("");
  return [
    `<h2 class="article-title">${escapeHtml(article.word)}</h2>`,
    `<ul class="statements">${rows}</ul>`,
  ].join("");
}

export function renderAnswers(answer: AskView): string {
  if (answer.kind === "yn") {
    return `<p class="answer answer-${answer.verdict}">${answer.verdict}</p>`;
  }
  if (answer.kind === "red") {
    return (
      `<p class="answer answer-red">the reasoner cannot evaluate this ` +
      `question (${escapeHtml(answer.reason)})</p>`
    );
  }
  if (answer.individuals.length === 0) {
    return `<p class="answer">no known individuals match</p>`;
  }
  const rows = answer.sentences
    .map((s) => `<li>${escapeHtml(s)}</li>`)
    .join("");
  return `<ul class="answers">${rows}</ul>`;
}

export function renderSentenceList(sentences: string[], empty: string): string {
  if (sentences.length === 0) {
    return `<p class="empty">${escapeHtml(empty)}</p>`;
  }
  return `<ul class="sentences">${sentences
    .map((s) => `<li>${escapeHtml(s)}</li>`)
    .join("")}</ul>`;
}

export function renderWordList(words: { lemma: string; word_class: string }[]): string {
  const rows = words
    .map(
      (w) =>
        `<li><a href="#/article/${encodeURIComponent(w.lemma)}">` +
        `${escapeHtml(w.lemma)}</a> <span class="word-class">` +
        `${escapeHtml(w.word_class)}</span></li>`,
    )
    .join("");
  return `<ul class="words">${rows}</ul>`;
}

export function renderEditorMenus(
  menus: Record<string, string[]>,
  complete: boolean,
): string {
  const sections = Object.entries(menus)
    .filter(([, tokens]) => tokens.length > 0)
    .map(([label, tokens]) => {
      const buttons = tokens
        .map(
          (t) =>
            `<button class="token" data-token="${escapeHtml(t)}">` +
            `${escapeHtml(t)}</button>`,
        )
        .join("");
      return `<div class="menu"><span class="menu-label">${escapeHtml(
        label,
      )}</span>${buttons}</div>`;
    });
  if (complete) {
    sections.push(
      `<div class="menu"><button class="submit">add sentence</button></div>`,
    );
  }
  if (sections.length === 0) {
    return `<p class="empty">nothing can follow here; backspace to change course</p>`;
  }
  return sections.join("");
}
