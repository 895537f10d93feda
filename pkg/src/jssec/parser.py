"""Recursive-descent parser for ECMAScript 2020 sources.

Produces ESTree-shaped nodes with character spans. Deliberately permissive
about context restrictions a runtime would enforce (strict mode, await/yield
placement): a linter wants a tree for as many real-world files as possible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .nodes import Node
from .source import ParseDiagnostic, SourceUnit
from .tokenizer import Comment, KEYWORDS, Token, TokenizerError, tokenize

_BINARY_PRECEDENCE = {
    "??": 1, "||": 2, "&&": 3, "|": 4, "^": 5, "&": 6,
    "==": 7, "!=": 7, "===": 7, "!==": 7,
    "<": 8, ">": 8, "<=": 8, ">=": 8, "in": 8, "instanceof": 8,
    "<<": 9, ">>": 9, ">>>": 9,
    "+": 10, "-": 10,
    "*": 11, "/": 11, "%": 11,
    "**": 12,
}

_LOGICAL_OPS = {"&&", "||", "??"}

_ASSIGN_OPS = {
    "=", "+=", "-=", "*=", "/=", "%=", "**=", "<<=", ">>=", ">>>=",
    "&=", "|=", "^=", "&&=", "||=", "??=",
}

_UNARY_OPS = {"+", "-", "~", "!"}
_UNARY_KEYWORDS = {"delete", "void", "typeof"}

_EXPR_START_PUNCT = {"(", "[", "{", "+", "-", "~", "!", "++", "--", "...", "/"}


class ParseError(Exception):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.message = message
        self.pos = pos


@dataclass
class SyntaxTree:
    root: Node
    tokens: list[Token]
    comments: list[Comment]
    source_type: str


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        self.prev_end = 0
        self.saw_import_meta = False

    # --- token plumbing ---

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        j = min(self.i + k, len(self.tokens) - 1)
        return self.tokens[j]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.prev_end = t.end
        if self.i < len(self.tokens) - 1:
            self.i += 1
        return t

    def at_punct(self, *values: str) -> bool:
        t = self.tok
        return t.kind == "PUNCT" and t.value in values

    def at_name(self, *names: str) -> bool:
        t = self.tok
        return t.kind == "NAME" and t.cooked in names

    def eat_punct(self, value: str) -> bool:
        if self.at_punct(value):
            self.advance()
            return True
        return False

    def expect_punct(self, value: str):
        if not self.at_punct(value):
            raise ParseError(f"expected '{value}'", self.tok.start)
        self.advance()

    def expect_name(self, name: str):
        if not self.at_name(name):
            raise ParseError(f"expected '{name}'", self.tok.start)
        self.advance()

    def finish(self, start: int, type: str, **fields) -> Node:
        return Node(type, start, self.prev_end, **fields)

    def consume_semicolon(self):
        if self.eat_punct(";"):
            return
        t = self.tok
        if t.kind == "EOF" or (t.kind == "PUNCT" and t.value == "}") or t.nl_before:
            return
        raise ParseError("expected ';'", t.start)

    def _can_asi(self) -> bool:
        t = self.tok
        return t.kind == "EOF" or (t.kind == "PUNCT" and t.value in ";}") or t.nl_before

    # --- program ---

    def parse_program(self) -> Node:
        body = []
        while self.tok.kind != "EOF":
            body.append(self.parse_statement(top=True))
        return Node("Program", 0, self.prev_end, body=body)

    # --- statements ---

    def parse_statement(self, top: bool = False) -> Node:
        t = self.tok
        if t.kind == "PUNCT":
            if t.value == "{":
                return self.parse_block()
            if t.value == ";":
                start = t.start
                self.advance()
                return self.finish(start, "EmptyStatement")
        if t.kind == "NAME":
            kw = t.cooked
            if kw in ("var", "const"):
                return self.parse_variable_statement()
            if kw == "let" and self._let_is_declaration():
                return self.parse_variable_statement()
            if kw == "function":
                return self.parse_function(is_decl=True, is_async=False)
            if kw == "async" and self.peek().kind == "NAME" \
                    and self.peek().cooked == "function" and not self.peek().nl_before:
                start = t.start
                self.advance()
                return self.parse_function(is_decl=True, is_async=True, start=start)
            if kw == "class":
                return self.parse_class(is_decl=True)
            if kw == "if":
                return self.parse_if()
            if kw == "for":
                return self.parse_for()
            if kw == "while":
                return self.parse_while()
            if kw == "do":
                return self.parse_do_while()
            if kw == "switch":
                return self.parse_switch()
            if kw == "try":
                return self.parse_try()
            if kw == "return":
                return self.parse_return()
            if kw == "throw":
                return self.parse_throw()
            if kw in ("break", "continue"):
                return self.parse_break_continue(kw)
            if kw == "debugger":
                start = t.start
                self.advance()
                self.consume_semicolon()
                return self.finish(start, "DebuggerStatement")
            if kw == "with":
                return self.parse_with()
            if kw == "import" and not (
                self.peek().kind == "PUNCT" and self.peek().value in ("(", ".")
            ):
                if not top:
                    raise ParseError("import declaration outside top level", t.start)
                return self.parse_import()
            if kw == "export":
                if not top:
                    raise ParseError("export declaration outside top level", t.start)
                return self.parse_export()
            if kw not in KEYWORDS and self.peek().kind == "PUNCT" \
                    and self.peek().value == ":":
                return self.parse_labeled()
        return self.parse_expression_statement()

    def _let_is_declaration(self) -> bool:
        nxt = self.peek()
        if nxt.kind == "NAME" and nxt.cooked not in KEYWORDS:
            return True
        return nxt.kind == "PUNCT" and nxt.value in ("[", "{")

    def parse_block(self) -> Node:
        start = self.tok.start
        self.expect_punct("{")
        body = []
        while not self.at_punct("}"):
            if self.tok.kind == "EOF":
                raise ParseError("unterminated block", start)
            body.append(self.parse_statement())
        self.advance()
        return self.finish(start, "BlockStatement", body=body)

    def parse_variable_statement(self) -> Node:
        node = self.parse_variable_declaration(no_in=False)
        self.consume_semicolon()
        node.end = self.prev_end
        return node

    def parse_variable_declaration(self, no_in: bool) -> Node:
        start = self.tok.start
        kind = self.advance().cooked
        declarations = []
        while True:
            d_start = self.tok.start
            target = self.parse_binding_target()
            init = None
            if self.eat_punct("="):
                init = self.parse_assignment(no_in=no_in)
            declarations.append(self.finish(d_start, "VariableDeclarator", id=target, init=init))
            if not self.eat_punct(","):
                break
        return self.finish(start, "VariableDeclaration", kind=kind, declarations=declarations)

    def parse_if(self) -> Node:
        start = self.advance().start
        self.expect_punct("(")
        test = self.parse_expression()
        self.expect_punct(")")
        consequent = self.parse_statement()
        alternate = None
        if self.at_name("else"):
            self.advance()
            alternate = self.parse_statement()
        return self.finish(start, "IfStatement", test=test, consequent=consequent,
                           alternate=alternate)

    def parse_for(self) -> Node:
        start = self.advance().start
        is_await = False
        if self.at_name("await"):
            self.advance()
            is_await = True
        self.expect_punct("(")
        init = None
        if self.at_punct(";"):
            self.advance()
        else:
            if self.at_name("var", "const") or (self.at_name("let") and self._let_is_declaration()):
                init = self.parse_variable_declaration(no_in=True)
            else:
                init = self.parse_expression(no_in=True)
            if self.at_name("in") or self.at_name("of"):
                of = self.advance().cooked == "of"
                left = init
                if left.type not in ("VariableDeclaration",):
                    left = self.to_pattern(left, binding=False)
                right = self.parse_assignment() if of else self.parse_expression()
                self.expect_punct(")")
                body = self.parse_statement()
                type = "ForOfStatement" if of else "ForInStatement"
                extra = {"await": is_await} if of else {}
                return self.finish(start, type, left=left, right=right, body=body, **extra)
            self.expect_punct(";")
        test = None if self.at_punct(";") else self.parse_expression()
        self.expect_punct(";")
        update = None if self.at_punct(")") else self.parse_expression()
        self.expect_punct(")")
        body = self.parse_statement()
        return self.finish(start, "ForStatement", init=init, test=test, update=update, body=body)

    def parse_while(self) -> Node:
        start = self.advance().start
        self.expect_punct("(")
        test = self.parse_expression()
        self.expect_punct(")")
        body = self.parse_statement()
        return self.finish(start, "WhileStatement", test=test, body=body)

    def parse_do_while(self) -> Node:
        start = self.advance().start
        body = self.parse_statement()
        self.expect_name("while")
        self.expect_punct("(")
        test = self.parse_expression()
        self.expect_punct(")")
        self.eat_punct(";")
        return self.finish(start, "DoWhileStatement", body=body, test=test)

    def parse_switch(self) -> Node:
        start = self.advance().start
        self.expect_punct("(")
        discriminant = self.parse_expression()
        self.expect_punct(")")
        self.expect_punct("{")
        cases = []
        while not self.at_punct("}"):
            c_start = self.tok.start
            if self.at_name("case"):
                self.advance()
                test = self.parse_expression()
            elif self.at_name("default"):
                self.advance()
                test = None
            else:
                raise ParseError("expected 'case' or 'default'", self.tok.start)
            self.expect_punct(":")
            consequent = []
            while not (self.at_punct("}") or self.at_name("case") or self.at_name("default")):
                if self.tok.kind == "EOF":
                    raise ParseError("unterminated switch", start)
                consequent.append(self.parse_statement())
            cases.append(self.finish(c_start, "SwitchCase", test=test, consequent=consequent))
        self.advance()
        return self.finish(start, "SwitchStatement", discriminant=discriminant, cases=cases)

    def parse_try(self) -> Node:
        start = self.advance().start
        block = self.parse_block()
        handler = None
        finalizer = None
        if self.at_name("catch"):
            h_start = self.advance().start
            param = None
            if self.eat_punct("("):
                param = self.parse_binding_target()
                self.expect_punct(")")
            body = self.parse_block()
            handler = self.finish(h_start, "CatchClause", param=param, body=body)
        if self.at_name("finally"):
            self.advance()
            finalizer = self.parse_block()
        if handler is None and finalizer is None:
            raise ParseError("try without catch or finally", start)
        return self.finish(start, "TryStatement", block=block, handler=handler,
                           finalizer=finalizer)

    def parse_return(self) -> Node:
        start = self.advance().start
        argument = None
        if not self._can_asi():
            argument = self.parse_expression()
        self.consume_semicolon()
        return self.finish(start, "ReturnStatement", argument=argument)

    def parse_throw(self) -> Node:
        start = self.advance().start
        if self.tok.nl_before:
            raise ParseError("newline after 'throw'", self.tok.start)
        argument = self.parse_expression()
        self.consume_semicolon()
        return self.finish(start, "ThrowStatement", argument=argument)

    def parse_break_continue(self, kw: str) -> Node:
        start = self.advance().start
        label = None
        if self.tok.kind == "NAME" and self.tok.cooked not in KEYWORDS \
                and not self.tok.nl_before:
            label = self.parse_identifier()
        self.consume_semicolon()
        type = "BreakStatement" if kw == "break" else "ContinueStatement"
        return self.finish(start, type, label=label)

    def parse_with(self) -> Node:
        start = self.advance().start
        self.expect_punct("(")
        obj = self.parse_expression()
        self.expect_punct(")")
        body = self.parse_statement()
        return self.finish(start, "WithStatement", object=obj, body=body)

    def parse_labeled(self) -> Node:
        start = self.tok.start
        label = self.parse_identifier()
        self.expect_punct(":")
        body = self.parse_statement()
        return self.finish(start, "LabeledStatement", label=label, body=body)

    def parse_expression_statement(self) -> Node:
        start = self.tok.start
        expr = self.parse_expression()
        self.consume_semicolon()
        return self.finish(start, "ExpressionStatement", expression=expr)

    # --- modules ---

    def parse_import(self) -> Node:
        start = self.advance().start
        specifiers = []
        if self.tok.kind == "STR":
            source = self.parse_literal()
            self.consume_semicolon()
            return self.finish(start, "ImportDeclaration", specifiers=specifiers, source=source)
        if self.tok.kind == "NAME" and self.tok.cooked not in KEYWORDS:
            s_start = self.tok.start
            local = self.parse_identifier()
            specifiers.append(self.finish(s_start, "ImportDefaultSpecifier", local=local))
            if self.eat_punct(","):
                self._parse_import_rest(specifiers)
        else:
            self._parse_import_rest(specifiers)
        self.expect_name("from")
        source = self.parse_literal()
        self.consume_semicolon()
        return self.finish(start, "ImportDeclaration", specifiers=specifiers, source=source)

    def _parse_import_rest(self, specifiers: list):
        if self.at_punct("*"):
            s_start = self.advance().start
            self.expect_name("as")
            local = self.parse_identifier()
            specifiers.append(self.finish(s_start, "ImportNamespaceSpecifier", local=local))
            return
        self.expect_punct("{")
        while not self.at_punct("}"):
            s_start = self.tok.start
            imported = self.parse_module_export_name()
            local = imported
            if self.at_name("as"):
                self.advance()
                local = self.parse_identifier()
            specifiers.append(self.finish(s_start, "ImportSpecifier", imported=imported,
                                          local=local))
            if not self.eat_punct(","):
                break
        self.expect_punct("}")

    def parse_module_export_name(self) -> Node:
        if self.tok.kind == "STR":
            return self.parse_literal()
        t = self.tok
        if t.kind != "NAME":
            raise ParseError("expected import/export name", t.start)
        self.advance()
        return self.finish(t.start, "Identifier", name=t.cooked)

    def parse_export(self) -> Node:
        start = self.advance().start
        if self.at_punct("*"):
            self.advance()
            exported = None
            if self.at_name("as"):
                self.advance()
                exported = self.parse_module_export_name()
            self.expect_name("from")
            source = self.parse_literal()
            self.consume_semicolon()
            return self.finish(start, "ExportAllDeclaration", exported=exported, source=source)
        if self.at_name("default"):
            self.advance()
            if self.at_name("function") or (self.at_name("async") and
                                            self.peek().cooked == "function"):
                is_async = self.at_name("async")
                if is_async:
                    self.advance()
                decl = self.parse_function(is_decl=True, is_async=is_async, id_optional=True)
            elif self.at_name("class"):
                decl = self.parse_class(is_decl=True, id_optional=True)
            else:
                decl = self.parse_assignment()
                self.consume_semicolon()
            return self.finish(start, "ExportDefaultDeclaration", declaration=decl)
        if self.at_punct("{"):
            specifiers = []
            self.advance()
            while not self.at_punct("}"):
                s_start = self.tok.start
                local = self.parse_module_export_name()
                exported = local
                if self.at_name("as"):
                    self.advance()
                    exported = self.parse_module_export_name()
                specifiers.append(self.finish(s_start, "ExportSpecifier", local=local,
                                              exported=exported))
                if not self.eat_punct(","):
                    break
            self.expect_punct("}")
            source = None
            if self.at_name("from"):
                self.advance()
                source = self.parse_literal()
            self.consume_semicolon()
            return self.finish(start, "ExportNamedDeclaration", declaration=None,
                               specifiers=specifiers, source=source)
        declaration = self.parse_statement()
        return self.finish(start, "ExportNamedDeclaration", declaration=declaration,
                           specifiers=[], source=None)

    # --- functions and classes ---

    def parse_function(self, is_decl: bool, is_async: bool, start: int | None = None,
                       id_optional: bool = False) -> Node:
        if start is None:
            start = self.tok.start
        self.expect_name("function")
        generator = self.eat_punct("*")
        fn_id = None
        if self.tok.kind == "NAME" and self.tok.cooked not in KEYWORDS:
            fn_id = self.parse_identifier()
        elif is_decl and not id_optional:
            raise ParseError("function declaration requires a name", self.tok.start)
        params = self.parse_params()
        body = self.parse_block()
        type = "FunctionDeclaration" if is_decl else "FunctionExpression"
        return self.finish(start, type, id=fn_id, params=params, body=body,
                           generator=generator, **{"async": is_async})

    def parse_params(self) -> list:
        self.expect_punct("(")
        params = []
        while not self.at_punct(")"):
            if self.at_punct("..."):
                r_start = self.advance().start
                params.append(self.finish(r_start, "RestElement",
                                          argument=self.parse_binding_target()))
            else:
                params.append(self.parse_binding_element())
            if not self.eat_punct(","):
                break
        self.expect_punct(")")
        return params

    def parse_binding_element(self) -> Node:
        start = self.tok.start
        target = self.parse_binding_target()
        if self.eat_punct("="):
            default = self.parse_assignment()
            return self.finish(start, "AssignmentPattern", left=target, right=default)
        return target

    def parse_binding_target(self) -> Node:
        t = self.tok
        if t.kind == "NAME":
            if t.cooked in KEYWORDS:
                raise ParseError(f"unexpected keyword {t.cooked!r}", t.start)
            return self.parse_identifier()
        if self.at_punct("["):
            return self.parse_array_pattern()
        if self.at_punct("{"):
            return self.parse_object_pattern()
        raise ParseError("expected binding target", t.start)

    def parse_array_pattern(self) -> Node:
        start = self.tok.start
        self.expect_punct("[")
        elements = []
        while not self.at_punct("]"):
            if self.at_punct(","):
                elements.append(None)
                self.advance()
                continue
            if self.at_punct("..."):
                r_start = self.advance().start
                elements.append(self.finish(r_start, "RestElement",
                                            argument=self.parse_binding_target()))
            else:
                elements.append(self.parse_binding_element())
            if not self.eat_punct(","):
                break
        self.expect_punct("]")
        return self.finish(start, "ArrayPattern", elements=elements)

    def parse_object_pattern(self) -> Node:
        start = self.tok.start
        self.expect_punct("{")
        properties = []
        while not self.at_punct("}"):
            if self.at_punct("..."):
                r_start = self.advance().start
                properties.append(self.finish(r_start, "RestElement",
                                              argument=self.parse_binding_target()))
            else:
                p_start = self.tok.start
                key, computed = self.parse_property_key()
                if self.eat_punct(":"):
                    value = self.parse_binding_element()
                    shorthand = False
                elif key.type == "Identifier":
                    if self.eat_punct("="):
                        default = self.parse_assignment()
                        value = self.finish(p_start, "AssignmentPattern", left=key,
                                            right=default)
                    else:
                        value = key
                    shorthand = True
                else:
                    raise ParseError("expected ':' in object pattern", self.tok.start)
                properties.append(self.finish(p_start, "Property", key=key, value=value,
                                              kind="init", method=False,
                                              shorthand=shorthand, computed=computed))
            if not self.eat_punct(","):
                break
        self.expect_punct("}")
        return self.finish(start, "ObjectPattern", properties=properties)

    def parse_class(self, is_decl: bool, id_optional: bool = False) -> Node:
        start = self.advance().start
        cls_id = None
        if self.tok.kind == "NAME" and self.tok.cooked not in KEYWORDS:
            cls_id = self.parse_identifier()
        elif is_decl and not id_optional:
            raise ParseError("class declaration requires a name", self.tok.start)
        superclass = None
        if self.at_name("extends"):
            self.advance()
            superclass = self.parse_lhs_expression()
        body = self.parse_class_body()
        type = "ClassDeclaration" if is_decl else "ClassExpression"
        return self.finish(start, type, id=cls_id, superClass=superclass, body=body)

    def parse_class_body(self) -> Node:
        start = self.tok.start
        self.expect_punct("{")
        body = []
        while not self.at_punct("}"):
            if self.eat_punct(";"):
                continue
            body.append(self.parse_class_member())
        self.advance()
        return self.finish(start, "ClassBody", body=body)

    def parse_class_member(self) -> Node:
        start = self.tok.start
        static = False
        if self.at_name("static") and not (
            self.peek().kind == "PUNCT" and self.peek().value in ("(", "=", ";", "}")
        ):
            self.advance()
            static = True
            if self.at_punct("{"):
                block = self.parse_block()
                return Node("StaticBlock", start, block.end, body=block.body)
        is_async = False
        generator = False
        kind = "method"
        if self.at_name("async") and not self.peek().nl_before and not (
            self.peek().kind == "PUNCT" and self.peek().value in ("(", "=", ";", "}")
        ):
            self.advance()
            is_async = True
        if self.at_punct("*"):
            self.advance()
            generator = True
        if self.at_name("get", "set") and not (
            self.peek().kind == "PUNCT" and self.peek().value in ("(", "=", ";", "}")
        ):
            kind = self.advance().cooked
        key, computed = self.parse_property_key(allow_private=True)
        if self.at_punct("("):
            if kind == "method" and not static and not computed \
                    and key.type == "Identifier" and key.name == "constructor":
                kind = "constructor"
            value = self.parse_method_function(is_async, generator, self.tok.start)
            return self.finish(start, "MethodDefinition", key=key, value=value, kind=kind,
                               computed=computed, static=static)
        value = None
        if self.eat_punct("="):
            value = self.parse_assignment()
        self.consume_semicolon()
        return self.finish(start, "PropertyDefinition", key=key, value=value,
                           computed=computed, static=static)

    def parse_method_function(self, is_async: bool, generator: bool, start: int) -> Node:
        params = self.parse_params()
        body = self.parse_block()
        return self.finish(start, "FunctionExpression", id=None, params=params, body=body,
                           generator=generator, **{"async": is_async})

    # --- expressions ---

    def parse_expression(self, no_in: bool = False) -> Node:
        start = self.tok.start
        expr = self.parse_assignment(no_in=no_in)
        if self.at_punct(","):
            expressions = [expr]
            while self.eat_punct(","):
                expressions.append(self.parse_assignment(no_in=no_in))
            return self.finish(start, "SequenceExpression", expressions=expressions)
        return expr

    def parse_assignment(self, no_in: bool = False) -> Node:
        start = self.tok.start
        arrow = self.try_parse_arrow()
        if arrow is not None:
            return arrow
        if self.at_name("yield"):
            nxt = self.peek()
            if not (nxt.kind == "PUNCT" and nxt.value in
                    (")", "]", "}", ",", ";", ":")) and nxt.kind != "EOF":
                return self.parse_yield()
        left = self.parse_conditional(no_in=no_in)
        if self.tok.kind == "PUNCT" and self.tok.value in _ASSIGN_OPS:
            op = self.advance().value
            if op == "=":
                left = self.to_pattern(left, binding=False)
            elif left.type not in ("Identifier", "MemberExpression"):
                raise ParseError("invalid assignment target", left.start)
            right = self.parse_assignment(no_in=no_in)
            return self.finish(start, "AssignmentExpression", operator=op, left=left,
                               right=right)
        return left

    def parse_yield(self) -> Node:
        start = self.advance().start
        delegate = self.eat_punct("*")
        argument = None
        if not self._can_asi() and not self.at_punct(")", "]", ",", ":"):
            argument = self.parse_assignment()
        return self.finish(start, "YieldExpression", argument=argument, delegate=delegate)

    def try_parse_arrow(self) -> Node | None:
        t = self.tok
        if t.kind == "NAME" and t.cooked == "async" and not self.peek().nl_before:
            nxt = self.peek()
            if nxt.kind == "NAME" and nxt.cooked not in KEYWORDS \
                    and self.peek(2).kind == "PUNCT" and self.peek(2).value == "=>":
                start = self.advance().start
                param = self.parse_identifier()
                return self.parse_arrow_tail(start, [param], is_async=True)
            if nxt.kind == "PUNCT" and nxt.value == "(" and self._paren_is_arrow(self.i + 1):
                start = self.advance().start
                params = self.parse_arrow_params()
                return self.parse_arrow_tail(start, params, is_async=True)
        if t.kind == "NAME" and t.cooked not in KEYWORDS \
                and self.peek().kind == "PUNCT" and self.peek().value == "=>":
            start = t.start
            param = self.parse_identifier()
            return self.parse_arrow_tail(start, [param], is_async=False)
        if t.kind == "PUNCT" and t.value == "(" and self._paren_is_arrow(self.i):
            start = t.start
            params = self.parse_arrow_params()
            return self.parse_arrow_tail(start, params, is_async=False)
        return None

    def _paren_is_arrow(self, open_index: int) -> bool:
        """True when the paren group starting at open_index is followed by =>."""
        depth = 0
        j = open_index
        while j < len(self.tokens):
            tk = self.tokens[j]
            if tk.kind == "PUNCT":
                if tk.value in ("(", "[", "{"):
                    depth += 1
                elif tk.value in (")", "]", "}"):
                    depth -= 1
                    if depth == 0:
                        nxt = self.tokens[j + 1] if j + 1 < len(self.tokens) else None
                        return (nxt is not None and nxt.kind == "PUNCT"
                                and nxt.value == "=>" and not nxt.nl_before)
            elif tk.kind == "EOF":
                return False
            j += 1
        return False

    def parse_arrow_params(self) -> list:
        self.expect_punct("(")
        params = []
        while not self.at_punct(")"):
            if self.at_punct("..."):
                r_start = self.advance().start
                params.append(self.finish(r_start, "RestElement",
                                          argument=self.parse_binding_target()))
            else:
                expr = self.parse_assignment()
                params.append(self.to_pattern(expr, binding=True))
            if not self.eat_punct(","):
                break
        self.expect_punct(")")
        return params

    def parse_arrow_tail(self, start: int, params: list, is_async: bool) -> Node:
        self.expect_punct("=>")
        if self.at_punct("{"):
            body = self.parse_block()
            expression = False
        else:
            body = self.parse_assignment()
            expression = True
        return self.finish(start, "ArrowFunctionExpression", id=None, params=params,
                           body=body, generator=False, expression=expression,
                           **{"async": is_async})

    def parse_conditional(self, no_in: bool = False) -> Node:
        start = self.tok.start
        test = self.parse_binary(1, no_in=no_in)
        if self.eat_punct("?"):
            consequent = self.parse_assignment()
            self.expect_punct(":")
            alternate = self.parse_assignment(no_in=no_in)
            return self.finish(start, "ConditionalExpression", test=test,
                               consequent=consequent, alternate=alternate)
        return test

    def parse_binary(self, min_prec: int, no_in: bool = False) -> Node:
        start = self.tok.start
        left = self.parse_unary()
        while True:
            t = self.tok
            op = None
            if t.kind == "PUNCT" and t.value in _BINARY_PRECEDENCE:
                op = t.value
            elif t.kind == "NAME" and t.cooked in ("in", "instanceof"):
                if t.cooked == "in" and no_in:
                    break
                op = t.cooked
            if op is None:
                break
            prec = _BINARY_PRECEDENCE[op]
            if prec < min_prec:
                break
            self.advance()
            right = self.parse_binary(prec if op == "**" else prec + 1, no_in=no_in)
            type = "LogicalExpression" if op in _LOGICAL_OPS else "BinaryExpression"
            left = self.finish(start, type, operator=op, left=left, right=right)
        return left

    def parse_unary(self) -> Node:
        t = self.tok
        if t.kind == "PUNCT" and t.value in _UNARY_OPS:
            start = self.advance().start
            argument = self.parse_unary()
            return self.finish(start, "UnaryExpression", operator=t.value,
                               argument=argument, prefix=True)
        if t.kind == "PUNCT" and t.value in ("++", "--"):
            start = self.advance().start
            argument = self.parse_unary()
            return self.finish(start, "UpdateExpression", operator=t.value,
                               argument=argument, prefix=True)
        if t.kind == "NAME":
            if t.cooked in _UNARY_KEYWORDS:
                start = self.advance().start
                argument = self.parse_unary()
                return self.finish(start, "UnaryExpression", operator=t.cooked,
                                   argument=argument, prefix=True)
            if t.cooked == "await" and self._starts_expression(self.peek()):
                start = self.advance().start
                argument = self.parse_unary()
                return self.finish(start, "AwaitExpression", argument=argument)
        expr = self.parse_postfix()
        return expr

    def _starts_expression(self, t: Token) -> bool:
        if t.kind in ("NUM", "STR", "TEMPLATE", "REGEX", "NAME", "PRIVATE"):
            if t.kind == "NAME" and t.cooked in ("in", "instanceof", "of", "as"):
                return False
            return True
        return t.kind == "PUNCT" and t.value in _EXPR_START_PUNCT

    def parse_postfix(self) -> Node:
        start = self.tok.start
        expr = self.parse_lhs_expression()
        t = self.tok
        if t.kind == "PUNCT" and t.value in ("++", "--") and not t.nl_before:
            self.advance()
            return self.finish(start, "UpdateExpression", operator=t.value,
                               argument=expr, prefix=False)
        return expr

    def parse_lhs_expression(self) -> Node:
        start = self.tok.start
        if self.at_name("new"):
            base = self.parse_new()
        else:
            base = self.parse_primary()
        return self.parse_subscripts(base, start, allow_call=True)

    def parse_new(self) -> Node:
        start = self.advance().start
        if self.at_punct("."):
            self.advance()
            prop = self.parse_identifier_name()
            meta = Node("Identifier", start, start + 3, name="new")
            return self.finish(start, "MetaProperty", meta=meta, property=prop)
        if self.at_name("new"):
            callee = self.parse_new()
        else:
            callee = self.parse_primary()
        callee = self.parse_subscripts(callee, callee.start, allow_call=False)
        arguments = []
        if self.at_punct("("):
            arguments = self.parse_arguments()
        return self.finish(start, "NewExpression", callee=callee, arguments=arguments)

    def parse_subscripts(self, base: Node, start: int, allow_call: bool) -> Node:
        optional_chain = False
        while True:
            t = self.tok
            if t.kind == "PUNCT" and t.value == ".":
                self.advance()
                prop = self.parse_identifier_name(allow_private=True)
                base = self.finish(start, "MemberExpression", object=base, property=prop,
                                   computed=False, optional=False)
            elif t.kind == "PUNCT" and t.value == "?.":
                optional_chain = True
                self.advance()
                if self.at_punct("("):
                    if not allow_call:
                        raise ParseError("optional call in new expression", t.start)
                    arguments = self.parse_arguments()
                    base = self.finish(start, "CallExpression", callee=base,
                                       arguments=arguments, optional=True)
                elif self.at_punct("["):
                    self.advance()
                    prop = self.parse_expression()
                    self.expect_punct("]")
                    base = self.finish(start, "MemberExpression", object=base,
                                       property=prop, computed=True, optional=True)
                else:
                    prop = self.parse_identifier_name(allow_private=True)
                    base = self.finish(start, "MemberExpression", object=base,
                                       property=prop, computed=False, optional=True)
            elif t.kind == "PUNCT" and t.value == "[":
                self.advance()
                prop = self.parse_expression()
                self.expect_punct("]")
                base = self.finish(start, "MemberExpression", object=base, property=prop,
                                   computed=True, optional=False)
            elif t.kind == "PUNCT" and t.value == "(" and allow_call:
                arguments = self.parse_arguments()
                base = self.finish(start, "CallExpression", callee=base,
                                   arguments=arguments, optional=False)
            elif t.kind == "TEMPLATE" and t.sub in ("full", "head"):
                quasi = self.parse_template()
                base = self.finish(start, "TaggedTemplateExpression", tag=base, quasi=quasi)
            else:
                break
        if optional_chain:
            return Node("ChainExpression", base.start, base.end, expression=base)
        return base

    def parse_arguments(self) -> list:
        self.expect_punct("(")
        args = []
        while not self.at_punct(")"):
            if self.at_punct("..."):
                s_start = self.advance().start
                args.append(self.finish(s_start, "SpreadElement",
                                        argument=self.parse_assignment()))
            else:
                args.append(self.parse_assignment())
            if not self.eat_punct(","):
                break
        self.expect_punct(")")
        return args

    def parse_identifier(self) -> Node:
        t = self.tok
        if t.kind != "NAME" or t.cooked in KEYWORDS:
            raise ParseError("expected identifier", t.start)
        self.advance()
        return self.finish(t.start, "Identifier", name=t.cooked)

    def parse_identifier_name(self, allow_private: bool = False) -> Node:
        """Member property position: keywords are valid names here."""
        t = self.tok
        if allow_private and t.kind == "PRIVATE":
            self.advance()
            return self.finish(t.start, "PrivateIdentifier", name=t.cooked)
        if t.kind != "NAME":
            raise ParseError("expected property name", t.start)
        self.advance()
        return self.finish(t.start, "Identifier", name=t.cooked)

    def parse_literal(self) -> Node:
        t = self.tok
        if t.kind == "STR":
            self.advance()
            return self.finish(t.start, "Literal", value=t.cooked, raw=t.value)
        if t.kind == "NUM":
            self.advance()
            return self.finish(t.start, "Literal", value=t.cooked, raw=t.value)
        raise ParseError("expected literal", t.start)

    def parse_template(self) -> Node:
        start = self.tok.start
        quasis = []
        expressions = []
        t = self.advance()
        quasis.append(self._template_element(t))
        while t.sub in ("head", "middle"):
            expressions.append(self.parse_expression())
            t = self.tok
            if t.kind != "TEMPLATE" or t.sub not in ("middle", "tail"):
                raise ParseError("unterminated template literal", t.start)
            self.advance()
            quasis.append(self._template_element(t))
        return self.finish(start, "TemplateLiteral", quasis=quasis, expressions=expressions)

    def _template_element(self, t: Token) -> Node:
        trim_end = 1 if t.sub in ("full", "tail") else 2
        raw = t.value[1:-trim_end]
        return Node("TemplateElement", t.start + 1, t.end - trim_end, raw=raw,
                    cooked=t.cooked, tail=t.sub in ("full", "tail"))

    def parse_primary(self) -> Node:
        t = self.tok
        if t.kind == "NAME":
            kw = t.cooked
            if kw == "this":
                self.advance()
                return self.finish(t.start, "ThisExpression")
            if kw in ("true", "false"):
                self.advance()
                return self.finish(t.start, "Literal", value=(kw == "true"), raw=kw)
            if kw == "null":
                self.advance()
                return self.finish(t.start, "Literal", value=None, raw=kw)
            if kw == "function":
                return self.parse_function(is_decl=False, is_async=False)
            if kw == "async" and self.peek().kind == "NAME" \
                    and self.peek().cooked == "function" and not self.peek().nl_before:
                start = self.advance().start
                return self.parse_function(is_decl=False, is_async=True, start=start)
            if kw == "class":
                return self.parse_class(is_decl=False)
            if kw == "super":
                self.advance()
                return self.finish(t.start, "Super")
            if kw == "import":
                start = self.advance().start
                if self.at_punct("."):
                    self.advance()
                    prop = self.parse_identifier_name()
                    meta = Node("Identifier", start, start + 6, name="import")
                    self.saw_import_meta = True
                    return self.finish(start, "MetaProperty", meta=meta, property=prop)
                self.expect_punct("(")
                source = self.parse_assignment()
                self.eat_punct(",")
                self.expect_punct(")")
                return self.finish(start, "ImportExpression", source=source)
            if kw in KEYWORDS:
                raise ParseError(f"unexpected keyword {kw!r}", t.start)
            self.advance()
            return self.finish(t.start, "Identifier", name=kw)
        if t.kind in ("NUM", "STR"):
            return self.parse_literal()
        if t.kind == "REGEX":
            self.advance()
            body_end = t.value.rindex("/")
            return self.finish(t.start, "Literal", value=None, raw=t.value,
                               regex={"pattern": t.value[1:body_end],
                                      "flags": t.value[body_end + 1:]})
        if t.kind == "TEMPLATE":
            if t.sub not in ("full", "head"):
                raise ParseError("unexpected template fragment", t.start)
            return self.parse_template()
        if t.kind == "PRIVATE":
            # Only valid as `#field in obj`; accepted loosely.
            self.advance()
            return self.finish(t.start, "PrivateIdentifier", name=t.cooked)
        if t.kind == "PUNCT":
            if t.value == "(":
                self.advance()
                expr = self.parse_expression()
                self.expect_punct(")")
                return expr
            if t.value == "[":
                return self.parse_array_literal()
            if t.value == "{":
                return self.parse_object_literal()
        raise ParseError(f"unexpected token {t.value or t.kind!r}", t.start)

    def parse_array_literal(self) -> Node:
        start = self.tok.start
        self.expect_punct("[")
        elements = []
        while not self.at_punct("]"):
            if self.at_punct(","):
                elements.append(None)
                self.advance()
                continue
            if self.at_punct("..."):
                s_start = self.advance().start
                elements.append(self.finish(s_start, "SpreadElement",
                                            argument=self.parse_assignment()))
            else:
                elements.append(self.parse_assignment())
            if not self.eat_punct(","):
                break
        self.expect_punct("]")
        return self.finish(start, "ArrayExpression", elements=elements)

    def parse_object_literal(self) -> Node:
        start = self.tok.start
        self.expect_punct("{")
        properties = []
        while not self.at_punct("}"):
            properties.append(self.parse_object_property())
            if not self.eat_punct(","):
                break
        self.expect_punct("}")
        return self.finish(start, "ObjectExpression", properties=properties)

    def parse_object_property(self) -> Node:
        start = self.tok.start
        if self.at_punct("..."):
            self.advance()
            return self.finish(start, "SpreadElement", argument=self.parse_assignment())
        is_async = False
        generator = False
        kind = "init"
        t = self.tok
        if t.kind == "NAME" and t.cooked in ("get", "set") and not self._modifier_is_key():
            kind = self.advance().cooked
        elif t.kind == "NAME" and t.cooked == "async" and not self._modifier_is_key() \
                and not self.peek().nl_before:
            self.advance()
            is_async = True
            if self.at_punct("*"):
                self.advance()
                generator = True
        elif self.at_punct("*"):
            self.advance()
            generator = True
        key, computed = self.parse_property_key()
        if self.at_punct("("):
            value = self.parse_method_function(is_async, generator, self.tok.start)
            method = kind == "init"
            return self.finish(start, "Property", key=key, value=value, kind=kind,
                               method=method, shorthand=False, computed=computed)
        if kind != "init" or is_async or generator:
            raise ParseError("expected method body", self.tok.start)
        if self.eat_punct(":"):
            value = self.parse_assignment()
            return self.finish(start, "Property", key=key, value=value, kind="init",
                               method=False, shorthand=False, computed=computed)
        if key.type == "Identifier":
            if self.eat_punct("="):
                # Cover grammar: only valid after conversion to a pattern.
                default = self.parse_assignment()
                value = self.finish(start, "AssignmentPattern", left=key, right=default)
            else:
                value = key
            return self.finish(start, "Property", key=key, value=value, kind="init",
                               method=False, shorthand=True, computed=computed)
        raise ParseError("expected ':' after property key", self.tok.start)

    def _modifier_is_key(self) -> bool:
        """True when a get/set/async token is itself the property key
        (as in ``{get: 1}`` or ``{async(){}}``) rather than a modifier."""
        nxt = self.peek()
        if nxt.kind in ("NAME", "STR", "NUM", "PRIVATE"):
            return False
        return not (nxt.kind == "PUNCT" and nxt.value in ("[", "*"))

    def parse_property_key(self, allow_private: bool = False) -> tuple[Node, bool]:
        t = self.tok
        if self.at_punct("["):
            self.advance()
            key = self.parse_assignment()
            self.expect_punct("]")
            return key, True
        if t.kind in ("STR", "NUM"):
            return self.parse_literal(), False
        if allow_private and t.kind == "PRIVATE":
            self.advance()
            return self.finish(t.start, "PrivateIdentifier", name=t.cooked), False
        if t.kind == "NAME":
            self.advance()
            return self.finish(t.start, "Identifier", name=t.cooked), False
        raise ParseError("expected property key", t.start)

    # --- cover grammar conversion ---

    def to_pattern(self, node: Node, binding: bool) -> Node:
        """Reinterprets an expression as an assignment/binding pattern."""
        t = node.type
        if t == "Identifier":
            return node
        if t == "MemberExpression" and not binding:
            return node
        if t in ("ObjectPattern", "ArrayPattern", "AssignmentPattern", "RestElement"):
            return node
        if t == "ObjectExpression":
            node.type = "ObjectPattern"
            for i, prop in enumerate(node.properties):
                if prop.type == "SpreadElement":
                    node.properties[i] = Node("RestElement", prop.start, prop.end,
                                              argument=self.to_pattern(prop.argument,
                                                                       binding))
                elif prop.type == "Property":
                    if prop.get("method") or prop.get("kind") != "init":
                        raise ParseError("invalid destructuring target", prop.start)
                    prop.value = self.to_pattern(prop.value, binding)
            return node
        if t == "ArrayExpression":
            node.type = "ArrayPattern"
            for i, el in enumerate(node.elements):
                if el is None:
                    continue
                if el.type == "SpreadElement":
                    node.elements[i] = Node("RestElement", el.start, el.end,
                                            argument=self.to_pattern(el.argument, binding))
                else:
                    node.elements[i] = self.to_pattern(el, binding)
            return node
        if t == "AssignmentExpression" and node.operator == "=":
            return Node("AssignmentPattern", node.start, node.end,
                        left=self.to_pattern(node.left, binding), right=node.right)
        raise ParseError("invalid assignment target", node.start)


def parse_text(text: str) -> SyntaxTree:
    """Parses JS text; raises TokenizerError or ParseError on failure."""
    tokens, comments = tokenize(text)
    parser = Parser(tokens)
    root = parser.parse_program()
    if parser.tok.kind != "EOF":
        raise ParseError(f"unexpected token {parser.tok.value!r}", parser.tok.start)
    source_type = "script"
    if parser.saw_import_meta:
        source_type = "module"
    else:
        for stmt in root.body:
            if stmt.type.startswith(("Import", "Export")):
                source_type = "module"
                break
    return SyntaxTree(root=root, tokens=tokens, comments=comments, source_type=source_type)


def parse_source(unit: SourceUnit) -> SyntaxTree | ParseDiagnostic:
    """Parses one source unit, mapping failures to a diagnostic record."""
    try:
        tree = parse_text(unit.text)
    except (TokenizerError, ParseError) as exc:
        pos = min(exc.pos, max(len(unit.text) - 1, 0))
        return ParseDiagnostic(
            unit_id=unit.unit_id,
            path=unit.path,
            message=f"parse error: {exc.message}",
            span=unit.span(pos, min(pos + 1, len(unit.text))),
            recoverable=False,
        )
    if unit.source_type == "module":
        tree.source_type = "module"
    else:
        unit.source_type = tree.source_type
    return tree
