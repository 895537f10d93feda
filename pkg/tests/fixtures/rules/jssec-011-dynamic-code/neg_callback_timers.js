setTimeout(function () { refreshBadge(); }, 5000);
setInterval(pollQueue, 60000);
