/**
 * GradeBook47 program.
 */
public class GradeBook47 {
  public static void pattern(int size) {
    for (int row = 1; row <= size; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static char toLetter(int mark) {
    if (mark >= 90) {
      return 'A';
    } else if (mark >= 80) {
      return 'B';
    } else if (mark >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  public static int toNumber(String input) {
    try {
      return Integer.parseInt(input.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static long fact(int num) {
    if (num <= 1) {
      return 1;
    }
    return num * fact(num - 1);
  }

  public static void main(String[] args) {
    pattern(3);
    System.out.println("Grade: " + toLetter(47));
    int parsed = toNumber("42");
    System.out.println(parsed);
    System.out.println(fact(11));
  }
}
