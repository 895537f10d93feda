function appendComment(listEl, commentHtml) {
  listEl.insertAdjacentHTML("beforeend", commentHtml);
}
appendComment(document.getElementById("comments"), draftHtml);
