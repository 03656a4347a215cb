// Single-page wiring: hash routes (#/article/<word>, #/hierarchy, #/ask),
// one sentence editor per article page plus one for the question box.

import { api, WikiApiError } from "./api";
import { SentenceEditor, TokenNotOfferedError } from "./editor";
import {
  renderAnswers,
  renderArticle,
  renderEditorMenus,
  renderSentenceList,
  renderWordList,
  escapeHtml,
} from "./render";

const app = () => document.getElementById("app")!;

function flash(message: string): void {
  const node = document.getElementById("flash")!;
  node.textContent = message;
  node.classList.add("visible");
  setTimeout(() => node.classList.remove("visible"), 4000);
}

async function categoriesIndex(): Promise<Record<string, string[]>> {
  return (await api.words()).categories;
}

function editorSection(idPrefix: string): string {
  return [
    `<div class="editor" id="${idPrefix}-editor">`,
    `<p class="prefix" id="${idPrefix}-prefix"></p>`,
    `<button class="backspace" id="${idPrefix}-backspace">backspace</button>`,
    `<button class="clear" id="${idPrefix}-clear">clear</button>`,
    `<div class="menus" id="${idPrefix}-menus"></div>`,
    `</div>`,
  ].join("");
}

function drawEditor(idPrefix: string, editor: SentenceEditor): void {
  document.getElementById(`${idPrefix}-prefix`)!.textContent =
    editor.tokens.join(" ") || "(start your sentence)";
  const menus = document.getElementById(`${idPrefix}-menus`)!;
  menus.innerHTML = renderEditorMenus(editor.categoryOptions(), editor.complete());
}

function wireEditor(
  idPrefix: string,
  editor: SentenceEditor,
  onSubmit: (tokens: string[]) => Promise<void>,
): void {
  const menus = document.getElementById(`${idPrefix}-menus`)!;
  menus.addEventListener("click", async (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("token")) {
      try {
        await editor.choose(target.dataset.token!);
      } catch (error) {
        if (error instanceof TokenNotOfferedError) {
          await editor.refresh(); // stale menu: vocabulary moved, redraw
        } else {
          throw error;
        }
      }
      drawEditor(idPrefix, editor);
    } else if (target.classList.contains("submit")) {
      await onSubmit(editor.submit());
      await editor.clear();
      drawEditor(idPrefix, editor);
    }
  });
  document
    .getElementById(`${idPrefix}-backspace`)!
    .addEventListener("click", async () => {
      await editor.backspace();
      drawEditor(idPrefix, editor);
    });
  document
    .getElementById(`${idPrefix}-clear`)!
    .addEventListener("click", async () => {
      await editor.clear();
      drawEditor(idPrefix, editor);
    });
}

async function showArticle(word: string): Promise<void> {
  const [article, categories] = await Promise.all([
    api.article(word),
    categoriesIndex(),
  ]);
  app().innerHTML = [
    renderArticle(article),
    `<h3>add a sentence</h3>`,
    editorSection("article"),
  ].join("");
  const editor = new SentenceEditor((p) => api.predict(p), categories);
  await editor.start();
  drawEditor("article", editor);
  wireEditor("article", editor, async (tokens) => {
    const statement = await api.addStatement(word, tokens);
    if (statement.status === "conflict") {
      flash("kept, but it contradicts the ontology, so it stays red");
    } else if (statement.status === "nonowl") {
      flash(`kept, but outside the reasoner fragment (${statement.reason})`);
    }
    await showArticle(word);
  });
  app().addEventListener("click", async (event) => {
    const target = event.target as HTMLElement;
    const id = Number(target.dataset.id);
    if (!Number.isFinite(id)) return;
    if (target.classList.contains("remove")) {
      await api.removeStatement(word, id);
      await showArticle(word);
    } else if (target.classList.contains("reassert")) {
      const statement = await api.reassertStatement(word, id);
      flash(
        statement.status === "ok"
          ? "the sentence is consistent now and joined the ontology"
          : "still contradicts the ontology",
      );
      await showArticle(word);
    }
  });
}

async function showIndex(): Promise<void> {
  const words = await api.words();
  app().innerHTML = `<h2>words</h2>${renderWordList(words.words)}`;
}

async function showHierarchy(): Promise<void> {
  const view = await api.hierarchy();
  app().innerHTML =
    `<h2>hierarchy</h2>` +
    renderSentenceList(view.sentences, "no subclass relations are known yet");
}

async function showAsk(): Promise<void> {
  const categories = await categoriesIndex();
  app().innerHTML = [
    `<h2>ask a question</h2>`,
    editorSection("ask"),
    `<div id="ask-answers"></div>`,
  ].join("");
  const editor = new SentenceEditor((p) => api.predict(p), categories);
  await editor.start();
  drawEditor("ask", editor);
  wireEditor("ask", editor, async (tokens) => {
    const answer = await api.ask(tokens);
    document.getElementById("ask-answers")!.innerHTML = renderAnswers(answer);
  });
}

async function route(): Promise<void> {
  const hash = window.location.hash;
  try {
    const article = hash.match(/^#\/article\/(.+)$/);
    if (article) {
      await showArticle(decodeURIComponent(article[1]));
    } else if (hash === "#/hierarchy") {
      await showHierarchy();
    } else if (hash === "#/ask") {
      await showAsk();
    } else {
      await showIndex();
    }
  } catch (error) {
    if (error instanceof WikiApiError) {
      app().innerHTML = `<p class="error">${escapeHtml(error.payload.code)}: ${
        escapeHtml(error.payload.message)}</p>`;
    } else {
      throw error;
    }
  }
}

window.addEventListener("hashchange", route);
window.addEventListener("DOMContentLoaded", route);
