import java.util.Scanner;

public class GradeBook125 {
  static int fibonacci(int num) {
    int a = 0;
    int b = 1;
    for (int j = 0; j < num; j++) {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  static int largest(int[] data) {
    int max = data[0];
    for (int j = 1; j < data.length; j++) {
      if (data[j] > max) {
        max = data[j];
      }
    }
    return max;
  }

  public static int toNumber(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static int magnitude(int num) {
    return num < 0 ? -num : num;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {4, 8, 8, 1, 3, 2};
    System.out.println("Fib: " + fibonacci(14));
    int top = largest(numbers);
    System.out.println("Max is " + top);
    int parsed = toNumber("42");
    System.out.println(parsed);
    System.out.println(magnitude(9));
    sc.close();
  }
}
